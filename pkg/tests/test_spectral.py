import json
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artin_cohomology.poly import BiLaurent, UPoly, q_number
from artin_cohomology.spectral import (
    E1Page,
    a_complex_cohomology,
    at_q_minus_one,
    d1_closed_form,
    d1_coefficient,
    d2_coefficient_at_q_minus_one,
    e1_prediction,
    verify_e1,
)

q, t = BiLaurent.q(), BiLaurent.t()


def test_e1_n3_column_zero():
    assert e1_prediction(3).column(0) == {1: (2,), 2: (3,)}


def test_e1_n2():
    page = e1_prediction(2)
    assert page.entries == {(0, 1): (2,)}
    assert page.free == ((1, 0), (2, 0))


def test_e1_n4_layout():
    page = e1_prediction(4)
    assert page.column(0) == {1: (2,), 2: (3,), 3: (4,)}
    assert page.column(1) == {1: (2,), 2: (3,)}
    assert page.column(2) == {1: (2,)}


@pytest.mark.parametrize("n", range(2, 16))
def test_e1_positions_in_range(n):
    page = e1_prediction(n)
    for (s, r), ms in page.entries.items():
        assert 0 <= s <= n - 2
        assert 0 <= r <= n - s
        assert all(m >= 2 for m in ms)


@pytest.mark.parametrize("n", range(2, 16))
def test_e1_column_bounded_by_cell_count(n):
    # H^r of the A_{n-s-1} complex is a quotient of a free module of rank C(n-s-1, r)
    page = e1_prediction(n)
    for s in range(n - 1):
        for r, ms in page.column(s).items():
            assert len(ms) <= comb(n - s - 1, r)


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_e1(n):
    rep = verify_e1(n)
    assert rep.ok, [c for c in rep.checks if not c.ok]


def test_a2_cohomology_is_phi2_then_phi3():
    h = a_complex_cohomology(2)
    assert [str(f) for f in h[1].torsion] == ["1 + q"]
    assert [str(f) for f in h[2].torsion] == ["1 + q + q^2"]
    assert h[0].is_zero


@pytest.mark.parametrize("s", range(0, 8))
def test_d1_matches_closed_form(s):
    for n in range(s + 1, min(s + 3, 9)):
        assert d1_coefficient(n, s) == d1_closed_form(s)


def test_d1_first_values():
    assert d1_closed_form(0) == 1 + t
    assert d1_closed_form(1) == (1 + q) * (1 + q * t)
    assert d1_closed_form(2) == q_number(3) * (1 + q**2 * t)


@pytest.mark.parametrize("s", range(0, 10))
def test_d1_parity_at_q_minus_one(s):
    want = UPoly([1, 1], var="t") if s % 2 == 0 else UPoly([], var="t")
    assert at_q_minus_one(d1_closed_form(s)) == want


def test_d1_rejects_bad_s():
    with pytest.raises(ValueError):
        d1_coefficient(3, 3)
    with pytest.raises(ValueError):
        d1_coefficient(3, -1)


@pytest.mark.parametrize("s", range(0, 10))
def test_d2_is_unit_times_one_minus_t_squared(s):
    f = d2_coefficient_at_q_minus_one(s)
    c = f.coefficient(0)
    assert c != 0
    assert f == UPoly([c, 0, -c], var="t")


@given(st.integers(2, 20))
def test_e1_json_roundtrip(n):
    page = e1_prediction(n)
    assert E1Page.from_json(json.dumps(page.to_json())) == page
