"""
Discriminant and Galois closure of a triple cover
=================================================
"""

from prymcov.covers import CoveringRep, discriminant_rep, fiber_product_rep, galois_closure, equivalent_reps
from prymcov.genera import genus_from_monodromy
from prymcov.permgroup import Permutation

sigma = Permutation.from_cycles(3, (0, 1, 2))
tau = Permutation.from_cycles(3, (0, 1))

# an étale triple cover Y -> X of a genus-2 curve
f = CoveringRep(2, 3, (sigma, tau, sigma.inverse(), tau))
print("g(Y) =", genus_from_monodromy(f))

d = discriminant_rep(f)
print("g(D) =", genus_from_monodromy(d), "connected:", d.is_connected())

z = galois_closure(f)
print("closure degree:", z.degree, " g(Z) =", genus_from_monodromy(z.action))

# the fibre product with the discriminant is the same cover
h = fiber_product_rep(f, d)
print("Y x_X D equals Z:", equivalent_reps(h, z.action) is not None)
