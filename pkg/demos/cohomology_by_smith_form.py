"""
Cohomology from Smith normal forms
==================================

Specialize the B_n complex onto a principal ideal domain, diagonalize the
coboundaries and read off the invariant factors.  The closed formula
predicts the answer before any matrix is touched.
"""

from artin_cohomology.closed_form import compare_cohomology, predict_qt, specialize_prediction
from artin_cohomology.salvetti import CyclotomicPoint, GenericQ, QMinusOne, build_complex, specialize_complex
from artin_cohomology.smith import complex_cohomology

n = 4
print("predicted summands for B_4:")
print(predict_qt(n))

# q = -1: everything is a quotient of Q[t^+-1]
spec = QMinusOne()
h = complex_cohomology(specialize_complex(build_complex("B", n), spec))
print("\nat q = -1:")
print(h)

# q a primitive cube root of unity, and q left generic
for spec in (CyclotomicPoint(3), GenericQ()):
    computed = complex_cohomology(specialize_complex(build_complex("B", n), spec))
    report = compare_cohomology(computed, specialize_prediction(predict_qt(n), spec))
    print(f"\nover {computed.ring!r}: matches prediction = {report.ok}")
    print(computed)
