"""Curve coverings by permutation monodromy.

Modules, bottom-up: ``permgroup`` (permutations and tabulated groups),
``homenum`` (surface-group homomorphisms), ``covers`` (monodromy
representations), ``genera`` (Riemann-Hurwitz, quotients, the D6 tower),
``prym`` (Prym dimensions and polarization types) and ``cli``.
"""

__version__ = "0.1.0"
