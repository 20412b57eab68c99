"""Verification suites: each closed formula checked against an exact computation.

A suite is a function ``n_max -> list[Check]``.  Default ranges keep every
suite well under two minutes on a laptop; larger ``n_max`` values are
accepted but grow quickly (the B_n complex has ``2^n`` generators).
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable

from .closed_form import compare_cohomology, predict_affine, predict_qt, predict_t, specialize_prediction
from .coxeter import affine_a, affine_c, group_poincare_oracle, type_a, type_b
from .orbit import euler_characteristic, finite_parabolic_subsets
from .poly import UPoly, q_factorial, qt_double_factorial
from .reps import verify_all
from .salvetti import CyclotomicPoint, FractionField, GenericQ, QMinusOne, build_complex, filtration_quotient, specialize_complex
from .smith import complex_cohomology
from .spectral import at_q_minus_one, d1_closed_form, d1_coefficient, d2_coefficient_at_q_minus_one, verify_e1

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail, "seconds": round(self.seconds, 4)}


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    log.info("%s: %s (%.3fs)", name, "pass" if ok else "fail", dt)
    return Check(name, "pass" if ok else "fail", detail, dt)


def theorem_qt_specs(n: int) -> list:
    return [CyclotomicPoint(d) for d in range(1, n + 1)] + [GenericQ(), FractionField()]


def spec_name(spec) -> str:
    if isinstance(spec, CyclotomicPoint):
        return f"d={spec.d}"
    if isinstance(spec, QMinusOne):
        return "q=-1"
    if isinstance(spec, GenericQ):
        return "generic"
    if isinstance(spec, FractionField):
        return "frac"
    return repr(spec)


def compare_theorem_qt(n: int, spec):
    """Computed cohomology of the specialized B_n complex against the base-changed prediction."""
    computed = complex_cohomology(specialize_complex(build_complex("B", n), spec))
    expected = specialize_prediction(predict_qt(n), spec)
    return compare_cohomology(computed, expected)


def suite_theorem_qt(n_max: int = 6) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):
        for spec in theorem_qt_specs(n):

            def run(n=n, spec=spec):
                rep = compare_theorem_qt(n, spec)
                return rep.ok, "; ".join(rep.mismatches)

            out.append(_timed(f"theorem-qt n={n} {spec_name(spec)}", run))
    return out


def suite_theorem_t(n_max: int = 8) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):

        def run(n=n):
            computed = complex_cohomology(specialize_complex(build_complex("B", n), QMinusOne()))
            direct = compare_cohomology(computed, predict_t(n))
            via_qt = compare_cohomology(computed, specialize_prediction(predict_qt(n), QMinusOne()))
            return direct.ok and via_qt.ok, "; ".join(direct.mismatches + via_qt.mismatches)

        out.append(_timed(f"theorem-t n={n}", run))
    return out


def suite_e1(n_max: int = 6) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):

        def run(n=n):
            rep = verify_e1(n)
            bad = [f"({c.s},{c.r}) expected {c.expected} got {c.torsion}" for c in rep.checks if not c.ok]
            return rep.ok, "; ".join(bad)

        out.append(_timed(f"e1 page n={n}", run))
    for s in range(0, n_max):

        def run_d1(s=s):
            n = s + 1
            c = d1_coefficient(n, s)
            parity = at_q_minus_one(c)
            want = UPoly([1, 1], var="t") if s % 2 == 0 else UPoly([], var="t")
            return c == d1_closed_form(s) and parity == want, f"d1 = {c}, at q=-1: {parity}"

        out.append(_timed(f"d1 s={s}", run_d1))

    def run_d2():
        bad = []
        for s in range(0, n_max):
            f = d2_coefficient_at_q_minus_one(s)
            # a unit multiple of (1+t)(1-t) is c*(1 - t^2) with c a nonzero rational
            c = f.coefficient(0)
            if not (c and f == UPoly([c, 0, -c], var="t")):
                bad.append(f"s={s}: {f}")
        return not bad, "; ".join(bad)

    out.append(_timed("d2 at q=-1", run_d2))
    return out


def suite_shift(n_max: int = 8) -> list[Check]:
    out = []
    for fam in ("A", "B"):
        for n in range(1, n_max + 1):

            def run(fam=fam, n=n):
                bad = build_complex(fam, n).square_defects()
                return not bad, f"defects in degrees {bad}" if bad else ""

            out.append(_timed(f"delta^2=0 {fam}{n}", run))
    for n in range(2, n_max + 1):

        def run_q(n=n):
            bad = [s for s in range(n - 1) if not filtration_quotient(n, s).matches]
            return not bad, f"mismatched steps {bad}" if bad else ""

        out.append(_timed(f"filtration quotients B{n}", run_q))
    return out


def suite_poincare(n_max: int = 4) -> list[Check]:
    out = []
    for n in range(1, n_max + 1):
        out.append(
            _timed(f"oracle B{n}", lambda n=n: (group_poincare_oracle(type_b(n)) == qt_double_factorial(n), ""))
        )
    for n in range(1, n_max + 2):
        out.append(_timed(f"oracle A{n}", lambda n=n: (group_poincare_oracle(type_a(n)) == q_factorial(n + 1), "")))
    return out


def suite_reps(n_max: int = 5) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):
        for rep in verify_all(n):
            detail = "" if rep.ok else str(rep.to_json())
            out.append(Check(rep.label, "pass" if rep.ok else "fail", detail))
    return out


def suite_euler(n_max: int = 6) -> list[Check]:
    out = []
    for n in range(1, n_max + 1):
        for name, fam in (("Atilde", affine_a), ("Ctilde", affine_c)):

            def run(n=n, fam=fam):
                chi = euler_characteristic(fam(n))
                return chi == (-1) ** n, f"chi = {chi}"

            out.append(_timed(f"euler {name}:{n}", run))
    for n in range(1, n_max + 1):
        for name, fam in (("A", type_a), ("B", type_b)):
            out.append(_timed(f"euler {name}:{n}", lambda n=n, fam=fam: (euler_characteristic(fam(n)) == 0, "")))

    def fig():
        c = finite_parabolic_subsets(affine_a(2))
        return c.f_vector == (1, 3, 3), f"f-vector {c.f_vector}"

    out.append(_timed("f-vector Atilde:2", fig))
    for n in range(3, n_max + 2):

        def run_b(n=n):
            pred = predict_affine(n)
            chi = euler_characteristic(affine_a(n - 1))
            return pred.euler_characteristic == chi, f"betti {pred.betti}, chi {chi}"

        out.append(_timed(f"affine betti n={n}", run_b))
    return out


SUITES: dict[str, tuple[Callable[[int], list[Check]], int]] = {
    "theorem-qt": (suite_theorem_qt, 6),
    "theorem-t": (suite_theorem_t, 8),
    "e1": (suite_e1, 6),
    "shift": (suite_shift, 8),
    "poincare": (suite_poincare, 4),
    "reps": (suite_reps, 5),
    "euler": (suite_euler, 6),
}


def run_suite(name: str, n_max: int | None = None) -> list[Check]:
    fn, default = SUITES[name]
    return fn(default if n_max is None else n_max)
