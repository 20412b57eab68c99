import json
from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artin_cohomology.closed_form import predict_affine
from artin_cohomology.coxeter import INF, CoxeterDiagram, affine_a, affine_c, is_finite_type, type_a, type_b
from artin_cohomology.orbit import Presentation, artin_presentation, euler_characteristic, finite_parabolic_subsets


def test_atilde2_triangle():
    c = finite_parabolic_subsets(affine_a(2))
    assert c.f_vector == (1, 3, 3)
    assert c.euler_characteristic == 1
    assert (0, 1, 2) not in c.subsets


def test_atilde3():
    c = finite_parabolic_subsets(affine_a(3))
    assert c.f_vector == (1, 4, 6, 4)
    assert c.euler_characteristic == -1


def test_b3_is_full_cube():
    c = finite_parabolic_subsets(type_b(3))
    assert len(c.subsets) == 8
    assert c.euler_characteristic == 0


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("family", [affine_a, affine_c])
def test_affine_families(n, family):
    c = finite_parabolic_subsets(family(n))
    assert c.f_vector == tuple(comb(n + 1, k) for k in range(n + 1))
    assert euler_characteristic(family(n)) == (-1) ** n


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("family", [type_a, type_b])
def test_finite_types_have_zero_chi(n, family):
    assert euler_characteristic(family(n)) == 0
    assert len(finite_parabolic_subsets(family(n)).subsets) == 2**n


@pytest.mark.parametrize("n", range(3, 8))
def test_betti_numbers_match_chi(n):
    assert predict_affine(n).euler_characteristic == euler_characteristic(affine_a(n - 1))


def test_membership_accepts_any_order():
    c = finite_parabolic_subsets(affine_a(2))
    assert (1, 0) in c and [2] in c and () in c


@st.composite
def diagrams(draw):
    n = draw(st.integers(1, 6))
    labels = {}
    for i, j in combinations(range(n), 2):
        labels[(i, j)] = draw(st.sampled_from([2, 2, 2, 3, 3, 4, 5, 6, INF]))
    return CoxeterDiagram.build([f"s{k + 1}" for k in range(n)], labels)


@given(diagrams())
def test_enumeration_matches_brute_force(d):
    c = finite_parabolic_subsets(d)
    assert c.is_downward_closed()
    brute = {j for k in range(d.rank + 1) for j in combinations(range(d.rank), k) if is_finite_type(d.subdiagram(j))}
    assert set(c.subsets) == brute
    assert len(set(c.subsets)) == len(c.subsets)


@given(diagrams())
def test_finite_diagram_has_zero_chi(d):
    if is_finite_type(d):
        assert euler_characteristic(d) == 0


def test_presentation_b2():
    p = artin_presentation(type_b(2))
    assert p.generators == ("s1", "s2")
    assert p.relations == ((("s1", "s2", "s1", "s2"), ("s2", "s1", "s2", "s1")),)


def test_presentation_atilde2_has_three_braid_relations():
    p = artin_presentation(affine_a(2))
    assert len(p.relations) == 3
    assert all(len(lhs) == 3 for lhs, _ in p.relations)


@pytest.mark.parametrize("n", range(1, 8))
def test_presentation_type_a_counts(n):
    p = artin_presentation(type_a(n))
    lengths = [len(lhs) for lhs, _ in p.relations]
    assert lengths.count(3) == n - 1
    assert lengths.count(2) == comb(n - 1, 2)


def test_infinite_edge_gives_no_relation():
    assert artin_presentation(affine_a(1)).relations == ()


@given(diagrams())
def test_presentation_json_roundtrip(d):
    p = artin_presentation(d)
    assert Presentation.from_json(json.dumps(p.to_json())) == p
    assert str(p).startswith("< ")
