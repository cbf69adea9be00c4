"""
The D6 tower over P^1
=====================

A D6 Galois cover Z -> P^1 branched at six points, and every
intermediate quotient Z/H read off from the coset action on D6/H.
"""

from prymcov.genera import D6, find_tower_monodromy, tower_accola_residuals, tower_dot, tower_graph, tower_report

tuples = find_tower_monodromy()
print("valid branch tuples:", len(tuples))

first = tuples[0]
print("canonical tuple:", first.labels())

report = tower_report(first.branches)
for name, g in report.genera.items():
    print(f"  g({name}) = {g}")

# Accola's identity on D6 and on <psi^3, tau>; both residuals should vanish
print("Accola residuals:", tower_accola_residuals(first.branches))

# the quotient diagram, for graphviz
print(tower_dot(tower_graph(first.branches)))
print("elements of D6:", [D6.label(a) for a in D6.elements()])
