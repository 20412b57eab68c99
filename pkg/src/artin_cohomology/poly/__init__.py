"""Exact polynomial arithmetic: Laurent polynomials, cyclotomic fields, q-analogs."""

from .bilaurent import BiLaurent
from .cyclotomic import (
    CyclotomicElement,
    CyclotomicField,
    cyclotomic,
    cyclotomic_field_inverse,
    divisors,
    euler_phi,
)
from .qanalogs import (
    q_binomial,
    q_factorial,
    q_number,
    qt_binomial_mod,
    qt_binomial_mod_product,
    qt_double_factorial,
    qt_double_factorial_product,
    qt_even_number,
)
from .ratfunc import RationalFunction, RationalFunctionField
from .upoly import QQ, InexactDivisionError, RationalField, UPoly, poly_gcd, poly_xgcd

__all__ = [
    "BiLaurent",
    "CyclotomicElement",
    "CyclotomicField",
    "InexactDivisionError",
    "QQ",
    "RationalField",
    "RationalFunction",
    "RationalFunctionField",
    "UPoly",
    "cyclotomic",
    "cyclotomic_field_inverse",
    "divisors",
    "euler_phi",
    "poly_gcd",
    "poly_xgcd",
    "q_binomial",
    "q_factorial",
    "q_number",
    "qt_binomial_mod",
    "qt_binomial_mod_product",
    "qt_double_factorial",
    "qt_double_factorial_product",
    "qt_even_number",
]
