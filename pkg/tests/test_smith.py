import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_cohomology.poly import QQ, CyclotomicField, RationalFunctionField, UPoly
from artin_cohomology.rings import (
    R_QT,
    FieldRing,
    LaurentRing,
    Matrix,
    PolynomialRing,
    UnsupportedRingError,
    determinant,
    matmul,
)
from artin_cohomology.salvetti import (
    CyclotomicPoint,
    FractionField,
    FreeCochainComplex,
    GenericQ,
    QMinusOne,
    RationalPoint,
    build_complex,
    specialize_complex,
)
from artin_cohomology.smith import CohomologyModule, check_snf_shape, complex_cohomology, smith_normal_form

LT = LaurentRing(QQ, "t")
T = LT.gen()


def _poly_entries(field=QQ, var="t"):
    c = st.integers(-3, 3).map(field)
    return st.tuples(st.lists(c, max_size=3), st.integers(-1, 1)).map(lambda p: UPoly(p[0], field, p[1], var))


def _matrix(entries, max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: Matrix.from_rows(rows, c)
            )
        )
    )


def _assert_snf(a, ring):
    res = smith_normal_form(a, ring)
    assert matmul(matmul(res.U, a, ring), res.V, ring) == res.D
    check_snf_shape(res)
    assert ring.is_unit(determinant(res.U, ring))
    assert ring.is_unit(determinant(res.V, ring))
    return res


def test_identity():
    res = _assert_snf(Matrix.identity(3, LT), LT)
    assert res.D == Matrix.identity(3, LT)


def test_gcd_row():
    res = _assert_snf(Matrix.from_rows([[T + 1, T * T - 1]]), LT)
    assert res.D == Matrix.from_rows([[T + 1, LT.zero]])


def test_chain_already_diagonal():
    a = Matrix.from_rows([[T - 1, LT.zero], [LT.zero, (T - 1) * (T + 2)]])
    res = _assert_snf(a, LT)
    assert res.diagonal == [T - 1, (T - 1) * (T + 2)]


def test_laurent_units_are_stripped():
    a = Matrix.from_rows([[T**-3 * (2 * T + 2)]])
    assert smith_normal_form(a, LT).diagonal == [T + 1]


def test_polynomial_ring_keeps_x_as_prime():
    P = PolynomialRing(QQ, "x")
    x = P.gen()
    res = _assert_snf(Matrix.from_rows([[x * x, x], [x, x]]), P)
    assert res.invariant_factors == [x, x * x - x]


@settings(max_examples=150)
@given(_matrix(_poly_entries()))
def test_snf_properties_over_laurent_q(a):
    _assert_snf(a, LT)


@settings(max_examples=60)
@given(_matrix(_poly_entries(CyclotomicField(3)), 3))
def test_snf_properties_over_cyclotomic_field(a):
    _assert_snf(a, LaurentRing(CyclotomicField(3), "t"))


@settings(max_examples=40)
@given(_matrix(_poly_entries(RationalFunctionField("q")), 3))
def test_snf_properties_over_rational_functions(a):
    _assert_snf(a, LaurentRing(RationalFunctionField("q"), "t"))


@settings(max_examples=100)
@given(_matrix(_poly_entries()), st.randoms(use_true_random=False))
def test_invariant_factors_independent_of_row_and_column_order(a, rnd):
    rows = rnd.sample(range(a.nrows), a.nrows)
    cols = rnd.sample(range(a.ncols), a.ncols)
    b = a.submatrix(rows, cols)
    assert smith_normal_form(a, LT).diagonal == smith_normal_form(b, LT).diagonal
    assert smith_normal_form(a, LT).diagonal == smith_normal_form(a.transpose(), LT).diagonal[: min(a.shape)]


def test_two_variable_ring_rejected():
    with pytest.raises(UnsupportedRingError):
        smith_normal_form(Matrix.identity(2, R_QT), R_QT)


def test_cohomology_b2_at_q_minus_one():
    h = complex_cohomology(specialize_complex(build_complex("B", 2), QMinusOne()))
    assert h[0].is_zero
    assert h[1].free_rank == 0 and h[1].torsion == (T + 1,)
    assert h[2].free_rank == 0 and h[2].torsion == (T * T - 1,)


@pytest.mark.parametrize(
    "n, expected",
    [
        # invariant factors frozen from an independent computer-algebra Smith form
        (3, {1: ["1 + t"], 2: ["1 + t"], 3: ["1 + t"]}),
        (4, {1: ["1 + t"], 2: ["1 + t"], 3: ["1 + t"], 4: ["-1 + t^2"]}),
    ],
)
def test_cohomology_q_minus_one_frozen(n, expected):
    h = complex_cohomology(specialize_complex(build_complex("B", n), QMinusOne()))
    assert {k: [str(f) for f in h[k].torsion] for k in range(1, n + 1)} == expected
    assert h[0].is_zero


def test_cohomology_b2_generic():
    h = complex_cohomology(specialize_complex(build_complex("B", 2), GenericQ()))
    assert h[1].is_zero
    assert h[2].free_rank == 0
    field = RationalFunctionField("q")
    assert h[2].torsion == (UPoly([field.gen() ** -1, 1], field, 0, "t"),)
    assert str(h[2].torsion[0]) == "(q^-1) + t"


def test_cohomology_over_fraction_field_vanishes():
    for n in range(1, 7):
        h = complex_cohomology(specialize_complex(build_complex("B", n), FractionField()))
        assert all(h[k].is_zero for k in range(n + 1))


@pytest.mark.parametrize("spec", [RationalPoint(2, 3), RationalPoint(-1, -1), RationalPoint(1, 1)])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_alternating_sum_identity_over_fields(spec, n):
    cx = specialize_complex(build_complex("B", n), spec)
    h = complex_cohomology(cx)
    lhs = sum((-1) ** k * cx.rank(k) for k in cx.degrees)
    rhs = sum((-1) ** k * h[k].free_rank for k in cx.degrees)
    assert lhs == rhs


def test_rational_point_at_minus_one_sees_cohomology():
    # at q = t = -1 every t + q^k factor vanishes, so the field complex is not exact
    h = complex_cohomology(specialize_complex(build_complex("B", 2), RationalPoint(-1, -1)))
    assert sum(h[k].free_rank for k in range(3)) > 0


def _shuffled(cx, seed):
    rng = random.Random(seed)
    perms = [rng.sample(range(r), r) for r in cx.ranks]
    mats = tuple(d.submatrix(perms[k + 1], perms[k]) for k, d in enumerate(cx.coboundaries))
    return FreeCochainComplex(cx.ring, cx.ranks, mats)


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("spec", [QMinusOne(), CyclotomicPoint(3), GenericQ()])
def test_cohomology_independent_of_generator_order(seed, spec):
    cx = specialize_complex(build_complex("B", 4), spec)
    assert complex_cohomology(_shuffled(cx, seed)).groups == complex_cohomology(cx).groups


def test_non_complex_rejected():
    a = Matrix.from_rows([[LT.one]])
    bad = FreeCochainComplex(LT, (1, 1, 1), (a, a))
    with pytest.raises(ValueError):
        complex_cohomology(bad)


def test_field_cohomology_reports_ranks_only():
    F = FieldRing(QQ)
    one = Matrix.from_rows([[QQ.one]])
    h = complex_cohomology(FreeCochainComplex(F, (1, 1), (one,)))
    assert h[0].is_zero and h[1].is_zero


def test_module_json_roundtrip():
    h = complex_cohomology(specialize_complex(build_complex("B", 4), QMinusOne()))
    assert CohomologyModule.from_json(h.to_json(), h.ring) == h
