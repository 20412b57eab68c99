"""
Two braid representations, one conjugation apart
================================================

The Tong-Yang-Ma matrices and the representation induced from the B_n
local system both represent the braid group on n+1 strands.  After a
twist by -q they become conjugate by a diagonal matrix.
"""

from artin_cohomology.coxeter import type_a
from artin_cohomology.reps import induced_matrices, tym_matrices, verify_equivalence, verify_kent_peifer, verify_rep_relations

n = 3
for m in tym_matrices(n):
    print(m)
print()
for m in induced_matrices(n):
    print(m)

print("\nbraid relations hold:", verify_rep_relations(induced_matrices(n), type_a(n)).ok)
print("affine shift relations hold:", verify_kent_peifer(induced_matrices(n)).ok)

# four ways to write the diagonal conjugation; two spellings of one map work
report = verify_equivalence(n)
for conv, ok in report.results:
    print(f"  {conv}: {'yes' if ok else 'no'}")
print("the map:", report.convention)
