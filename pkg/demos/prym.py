"""
Prym varieties of triple covers
===============================

Dimensions and polarization types, the three profiles
where the type is a multiple of a principal one, and the genus-2 Prym fibre.
"""

from prymcov.genera import RamificationProfile
from prymcov.prym import (
    format_partition,
    infer_eta_location,
    PolarizationType,
    principal_grid,
    prym_map_fiber,
    prym_type,
)

for g, s, t in [(2, 0, 0), (1, 2, 0), (1, 0, 1), (3, 0, 0), (2, 2, 1)]:
    print(f"g_X={g} s={s} t={t}:", prym_type(g, RamificationProfile(s, t)))

principal, impossible = principal_grid()
print("principal profiles:", principal)
print("no non-cyclic cover:", impossible)

# a genus-2 X has 6 Weierstrass points; the fibre splits them 3 + 3
for part in prym_map_fiber("abcdef"):
    print(" ", format_partition(part))

print(infer_eta_location(PolarizationType((1, 1))))
