"""
The first page of the trailing-ones spectral sequence
=====================================================

Filtering B_n cochains by how many of the last nodes they contain splits
the complex into shifted copies of type A complexes.  Their cohomology is
cyclotomic torsion in q, laid out on the E1 page below.
"""

from artin_cohomology.spectral import d1_coefficient, e1_prediction, verify_e1

n = 5
page = e1_prediction(n)
for s in range(n - 1):
    col = page.column(s)
    print(f"s={s}:", "  ".join(f"r={r}:{list(ms)}" for r, ms in sorted(col.items())))
print("free spots:", page.free)

# every spot agrees with a direct computation
print("checked:", verify_e1(n).ok)

# the d1 differential has one entry per column
for s in range(4):
    print(f"d1 at s={s}:", d1_coefficient(n, s))
