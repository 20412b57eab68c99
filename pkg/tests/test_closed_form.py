import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artin_cohomology.closed_form import (
    CohomologyPrediction,
    ModuleSummand,
    UnsupportedSpecError,
    compare_cohomology,
    invariant_factors,
    predict_affine,
    predict_qt,
    predict_t,
    specialize_prediction,
)
from artin_cohomology.poly import QQ, RationalFunctionField, UPoly
from artin_cohomology.rings import LaurentRing
from artin_cohomology.salvetti import (
    CyclotomicPoint,
    FractionField,
    GenericQ,
    QMinusOne,
    TValue,
    build_complex,
    specialize_complex,
)
from artin_cohomology.smith import CohomologyGroup, CohomologyModule, complex_cohomology

LT = LaurentRing(QQ, "t")
T = LT.gen()


def S(m, i):
    return ModuleSummand(m, i)


def as_sets(pred):
    return {k: sorted(pred[k]) for k in range(pred.n + 1) if pred[k]}


def test_predict_qt_small_cases():
    assert as_sets(predict_qt(2)) == {2: [S(1, 1), S(2, 0)]}
    assert as_sets(predict_qt(3)) == {3: [S(1, 2), S(3, 0), S(3, 1)], 2: [S(2, 2)]}
    assert as_sets(predict_qt(4)) == {
        4: [S(1, 3), S(2, 0), S(4, 0), S(4, 1), S(4, 2)],
        3: [S(3, 3)],
        2: [S(2, 0)],
    }


def test_predict_qt_n1():
    assert as_sets(predict_qt(1)) == {1: [S(1, 0)]}


def test_summand_equality_is_componentwise():
    assert S(2, 0) != S(2, 1) and S(2, 0) != S(1, 0) and S(3, 1) == S(3, 1)
    with pytest.raises(ValueError):
        S(0, 0)


@pytest.mark.parametrize("n", range(1, 12))
def test_prediction_lives_in_degrees_one_to_n(n):
    pred = predict_qt(n)
    assert not pred[0]
    assert all(1 <= k <= n for k in pred.summands)
    assert pred.free_rank == 0
    assert sum(1 for s in pred[n] if s.m == 1) == 1


def test_prediction_text():
    assert str(predict_qt(2)) == "H^2 = {1}_1 + {2}_0\nH^1 = 0\nH^0 = 0"


@given(st.integers(1, 15))
def test_prediction_json_roundtrip(n):
    pred = predict_qt(n)
    back = CohomologyPrediction.from_json(json.dumps(pred.to_json()))
    assert as_sets(back) == as_sets(pred)


def test_predict_t_examples():
    assert predict_t(2)[1].torsion == (T + 1,) and predict_t(2)[2].torsion == (T * T - 1,)
    assert all(predict_t(3)[k].torsion == (T + 1,) for k in (1, 2, 3))
    assert predict_t(1)[1].torsion == (T + 1,)
    assert predict_t(5)[0].is_zero


def test_predict_affine_examples():
    assert predict_affine(3).betti == (1, 1, 1)
    assert predict_affine(4).betti == (1, 1, 1, 2)
    assert predict_affine(3).euler_characteristic == 1
    # q-modules: {1} summands become free, the rest cyclotomic torsion
    assert predict_affine(3).q_modules[2] == ((3, 3), 1)
    assert predict_affine(3).q_modules[1] == ((2,), 0)


@pytest.mark.parametrize("n", range(2, 12))
def test_affine_euler_characteristic_sign(n):
    assert predict_affine(n).euler_characteristic == (-1) ** (n - 1)


def test_specialize_n3_at_d2_reproduces_t_answer():
    exp = specialize_prediction(predict_qt(3), CyclotomicPoint(2))
    assert [[str(f) for f in exp[k].torsion] for k in (0, 1, 2, 3)] == [[], ["1 + t"], ["1 + t"], ["1 + t"]]
    assert compare_cohomology(specialize_prediction(predict_qt(3), QMinusOne()), predict_t(3)).ok


def test_specialize_generic_and_fraction_field():
    field = RationalFunctionField("q")
    exp = specialize_prediction(predict_qt(2), GenericQ())
    assert exp[1].is_zero
    assert exp[2].torsion == (UPoly([field.gen() ** -1, 1], field, 0, "t"),)
    frac = specialize_prediction(predict_qt(5), FractionField())
    assert all(frac[k].is_zero for k in range(6))


def test_unsupported_spec():
    with pytest.raises(UnsupportedSpecError):
        specialize_prediction(predict_qt(2), TValue(2))


def test_invariant_factor_stacking():
    got = invariant_factors([T + 1, T - 1, T + 1], LT)
    assert got == (T + 1, T * T - 1)


def test_compare_b2_at_q_minus_one():
    computed = complex_cohomology(specialize_complex(build_complex("B", 2), QMinusOne()))
    rep = compare_cohomology(computed, specialize_prediction(predict_qt(2), QMinusOne()))
    assert rep.ok and all(rep.matches.values())


def _perturbed(pred, degree):
    summands = dict(pred.summands)
    summands[degree] = tuple(sorted(summands.get(degree, ()) + (S(pred.n, 0),)))
    return CohomologyPrediction(pred.n, summands)


@pytest.mark.parametrize("spec", [CyclotomicPoint(3), QMinusOne()])
def test_negative_control(spec):
    cx = specialize_complex(build_complex("B", 3), spec)
    computed = complex_cohomology(cx)
    d = spec.d if isinstance(spec, CyclotomicPoint) else 2
    bad = _perturbed(predict_qt(3), 1) if d == 3 else CohomologyPrediction(3, {**predict_qt(3).summands, 1: (S(2, 1),)})
    rep = compare_cohomology(computed, specialize_prediction(bad, spec))
    assert not rep.ok
    assert any(k in (0, 1) and not ok for k, ok in rep.matches.items())
    assert all(ok for k, ok in rep.matches.items() if k >= 2)


def test_compare_free_rank_mismatch():
    got = CohomologyModule(LT, {1: CohomologyGroup(1)})
    want = CohomologyModule(LT, {1: CohomologyGroup(0)})
    rep = compare_cohomology(got, want)
    assert not rep.ok and rep.matches == {1: False}
    assert "free rank" in rep.mismatches[0]


def test_compare_rejects_ring_mismatch():
    with pytest.raises(ValueError):
        compare_cohomology(predict_t(2), specialize_prediction(predict_qt(2), CyclotomicPoint(3)))


@pytest.mark.parametrize("n", range(2, 5))
def test_theorem_grid_small(n):
    for spec in [CyclotomicPoint(d) for d in range(1, n + 1)] + [GenericQ(), FractionField()]:
        computed = complex_cohomology(specialize_complex(build_complex("B", n), spec))
        rep = compare_cohomology(computed, specialize_prediction(predict_qt(n), spec))
        assert rep.ok, (n, spec, rep.mismatches)


@pytest.mark.parametrize("n", range(2, 6))
def test_generic_q_sees_exactly_the_m1_summands(n):
    field = RationalFunctionField("q")
    computed = complex_cohomology(specialize_complex(build_complex("B", n), GenericQ()))
    ring = computed.ring
    for k in range(n + 1):
        ones = [s.i for s in predict_qt(n)[k] if s.m == 1]
        want = [ring.normal(UPoly([field.gen() ** -i, 1], field, 0, "t")) for i in ones]
        got = list(computed[k].torsion)
        assert computed[k].free_rank == 0
        prod_got, prod_want = ring.one, ring.one
        for f in got:
            prod_got = prod_got * f
        for f in want:
            prod_want = prod_want * f
        assert ring.normal(prod_got) == ring.normal(prod_want)


@pytest.mark.parametrize("spec", [QMinusOne(), CyclotomicPoint(3), GenericQ()])
def test_no_cohomology_outside_one_to_n(spec):
    for n in range(1, 6):
        h = complex_cohomology(specialize_complex(build_complex("B", n), spec))
        assert h[0].is_zero
        assert all(h[k].is_zero for k in range(n + 1, n + 3))
