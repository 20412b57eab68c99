"""Exact cohomology of the Artin groups of type A_n, B_n and affine A~_{n-1}.

The weighted Salvetti complex of ``G_{B_n}`` over ``Q[q^+-1, t^+-1]`` is
built exactly, specialized to principal ideal domains, and reduced to Smith
normal form; the results are compared with closed-form predictions.

>>> from artin_cohomology import predict_qt
>>> print(predict_qt(2))
H^2 = {1}_1 + {2}_0
H^1 = 0
H^0 = 0
"""

from .closed_form import (
    CohomologyPrediction,
    ModuleSummand,
    compare_cohomology,
    predict_affine,
    predict_qt,
    predict_t,
    specialize_prediction,
)
from .coxeter import (
    CoxeterDiagram,
    affine_a,
    affine_c,
    diagram_from_shorthand,
    finite_type_components,
    group_poincare_oracle,
    is_finite_type,
    parabolic_poincare,
    type_a,
    type_b,
)
from .orbit import artin_presentation, euler_characteristic, finite_parabolic_subsets
from .poly import BiLaurent, UPoly, cyclotomic, q_binomial, q_factorial, q_number, qt_binomial_mod, qt_double_factorial
from .reps import induced_matrices, tym_matrices, verify_equivalence, verify_rep_relations
from .salvetti import (
    CyclotomicPoint,
    FractionField,
    GenericQ,
    QMinusOne,
    build_complex,
    filtration_quotient,
    parse_specialization,
    specialize_complex,
)
from .smith import CohomologyModule, complex_cohomology, smith_normal_form
from .spectral import d1_coefficient, e1_prediction, verify_e1

__version__ = "0.1.0"
