import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_cohomology.poly import BiLaurent, CyclotomicField, q_binomial
from artin_cohomology.rings import R_QT, Matrix, matmul
from artin_cohomology.salvetti import (
    CyclotomicPoint,
    FractionField,
    FreeCochainComplex,
    GenericQ,
    QMinusOne,
    RationalPoint,
    TValue,
    build_complex,
    coboundary_coefficient,
    filtration_level,
    filtration_quotient,
    from_bitstring,
    parse_specialization,
    specialize_complex,
    to_bitstring,
)
from artin_cohomology.smith import matrix_rank

q, t = BiLaurent.q(), BiLaurent.t()


def test_bitstrings():
    assert to_bitstring((1, 3), 4) == "1010"
    assert from_bitstring("0011") == (3, 4)
    assert filtration_level((3, 4), 4) == 2
    assert filtration_level((1, 2, 3), 4) == 0


def test_coefficient_examples():
    assert coboundary_coefficient("B", 2, (1,), 2) == (-1, (1 + t) * (1 + q * t))
    for n in range(2, 6):
        assert coboundary_coefficient("B", n, (), 1) == (1, 1 + q)
    assert coboundary_coefficient("B", 1, (), 1) == (1, 1 + t)
    assert coboundary_coefficient("B", 2, (2,), 1) == (1, (1 + q) * (1 + q * t))


def test_coefficient_rejects_member():
    with pytest.raises(ValueError):
        coboundary_coefficient("B", 3, (1, 2), 2)


def test_b2_complex():
    cx = build_complex("B", 2)
    assert cx.ranks == (1, 2, 1)
    assert cx.bases == (((),), ((1,), (2,)), ((1, 2),))
    assert cx.coboundaries[0] == Matrix.from_rows([[1 + q], [1 + t]])
    assert cx.coboundaries[1] == Matrix.from_rows([[-(1 + t) * (1 + q * t), (1 + q) * (1 + q * t)]])


@pytest.mark.parametrize("n", range(1, 8))
def test_a_complex_is_t_free(n):
    cx = build_complex("A", n)
    assert all(x.free_of("t") for d in cx.coboundaries for r in d.rows for x in r)


@pytest.mark.parametrize("fam", ["A", "B"])
@pytest.mark.parametrize("n", range(1, 9))
def test_square_zero_and_ranks(fam, n):
    cx = build_complex(fam, n)
    assert cx.ranks == tuple(comb(n, k) for k in range(n + 1))
    assert cx.square_defects() == []


def test_specialization_examples():
    cx = build_complex("B", 2)
    m1 = specialize_complex(cx, QMinusOne()).coboundaries[1]
    ring = QMinusOne().ring
    tt = ring.gen()
    assert m1.rows == ((-(1 + tt) * (1 - tt), ring.zero),)
    d2 = specialize_complex(cx, CyclotomicPoint(2))
    assert [[str(x) for x in r] for r in d2.coboundaries[1].rows] == [[str(x) for x in r] for r in m1.rows]
    gen = specialize_complex(cx, GenericQ())
    assert gen.ring.field.name == "QQ(q)"


def test_zero_points_rejected():
    with pytest.raises(ValueError):
        TValue(0)
    with pytest.raises(ValueError):
        RationalPoint(0, 1)


def test_parse_specialization():
    assert parse_specialization("q=-1") == QMinusOne()
    assert parse_specialization("d=5") == CyclotomicPoint(5)
    assert parse_specialization("generic") == GenericQ()
    assert parse_specialization("frac") == FractionField()
    assert parse_specialization("t=2") == TValue(2)
    assert parse_specialization("point:2,3/5") == RationalPoint(Fraction(2), Fraction(3, 5))
    with pytest.raises(ValueError):
        parse_specialization("nonsense")


_entries = st.sampled_from(
    [BiLaurent.zero(), BiLaurent.one(), 1 + q, 1 + t, q * t - 1, q**-1 * t, 1 + q + q**2, (1 + q * t) * (1 - t)]
)


def _matrices(r, c):
    return st.lists(st.lists(_entries, min_size=c, max_size=c), min_size=r, max_size=r).map(
        lambda rows: Matrix.from_rows(rows, c)
    )


_specs = [QMinusOne(), CyclotomicPoint(3), CyclotomicPoint(5), GenericQ(), TValue(2), RationalPoint(3, -2)]


@settings(max_examples=100)
@given(_matrices(2, 3), _matrices(3, 2), st.sampled_from(_specs))
def test_specialization_commutes_with_products(a, b, spec):
    ring = spec.ring
    lhs = matmul(a, b, R_QT).map(spec)
    rhs = matmul(a.map(spec), b.map(spec), ring)
    assert lhs == rhs


def test_fraction_field_exactness():
    for n in range(1, 7):
        cx = specialize_complex(build_complex("B", n), FractionField())
        ring = cx.ring
        ranks = [matrix_rank(d, ring) for d in cx.coboundaries]
        for k in range(n + 1):
            into = ranks[k - 1] if k >= 1 else 0
            out = ranks[k] if k < n else 0
            assert cx.rank(k) - into - out == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_filtration_quotients(n):
    for s in range(n - 1):
        fq = filtration_quotient(n, s)
        assert fq.matches, (n, s, fq.mismatches)
        assert fq.complex.lo == s


def test_filtration_quotient_small_example():
    fq = filtration_quotient(3, 1)
    assert fq.complex.ranks == (1, 1)
    assert list(fq.complex.degrees) == [1, 2]
    assert fq.complex.coboundaries[0] == Matrix.from_rows([[q_binomial(2, 1)]])


def test_filtration_top_pieces():
    # F^n C_n is spanned by 1^n, and nothing has more than n trailing ones
    for n in range(1, 7):
        cx = build_complex("B", n)
        top = [g for b in cx.bases for g in b if filtration_level(g, n) >= n]
        assert top == [tuple(range(1, n + 1))]


def test_filtration_step_range():
    with pytest.raises(ValueError):
        filtration_quotient(4, 3)


def test_complex_json_roundtrip():
    cx = build_complex("B", 3)
    assert FreeCochainComplex.from_json(cx.to_json()) == cx


def test_specialization_preserves_square_zero_in_cyclotomic_fields():
    for d in range(1, 7):
        cx = specialize_complex(build_complex("B", 5), CyclotomicPoint(d))
        assert cx.ring.field == CyclotomicField(d)
        assert cx.square_defects() == []


def test_shuffled_generators_give_a_complex():
    # a permutation of each basis conjugates the coboundaries and keeps delta o delta = 0
    rng = random.Random(7)
    cx = build_complex("B", 4)
    perms = [rng.sample(range(r), r) for r in cx.ranks]
    mats = tuple(d.submatrix(perms[k + 1], perms[k]) for k, d in enumerate(cx.coboundaries))
    shuffled = FreeCochainComplex(R_QT, cx.ranks, mats)
    assert shuffled.square_defects() == []
