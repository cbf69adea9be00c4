"""
Counting triple covers of a genus-2 surface
===========================================

Connected étale triple covers with full monodromy S3 correspond to
surjections from the genus-2 surface group, up to conjugation.
"""

from prymcov.homenum import classes_up_to_conjugacy, enumerate_homs, is_surjective, transposition_histogram
from prymcov.permgroup import symmetric

S3 = symmetric(3)

# every 4-tuple (A1, B1, A2, B2) with [A1,B1][A2,B2] = 1
homs = enumerate_homs(2, S3)
print("relation-satisfying tuples:", len(homs))

surj = [h for h in homs if is_surjective(h)]
print("surjective:", len(surj))

# conjugation acts freely since S3 has trivial centre
classes = classes_up_to_conjugacy(surj)
print("classes:", len(classes), "sizes:", sorted({c.size for c in classes}))

print("first class:", classes[0].representative.labels())

# how many of the four images are transpositions
print("transposition histogram:", transposition_histogram(surj))
