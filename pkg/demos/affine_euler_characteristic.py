"""
Counting cells of the orbit space for affine diagrams
=====================================================

Subsets of nodes spanning a finite parabolic subgroup index the cells.
For the affine type A diagram every proper subset qualifies, so the
complex is the boundary of a simplex plus a base point.
"""

from artin_cohomology.closed_form import predict_affine
from artin_cohomology.coxeter import affine_a
from artin_cohomology.orbit import artin_presentation, finite_parabolic_subsets

print(artin_presentation(affine_a(2)))

for n in range(2, 6):
    cells = finite_parabolic_subsets(affine_a(n))
    print(f"A~{n}: f-vector {cells.f_vector}, euler characteristic {cells.euler_characteristic}")

# the Betti numbers from the closed formula alternate to the same number
for n in range(3, 7):
    a = predict_affine(n)
    print(f"G(A~{n - 1}) betti {a.betti} -> {a.euler_characteristic}")
