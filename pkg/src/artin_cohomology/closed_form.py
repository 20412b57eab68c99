"""Closed-form cohomology of G_{B_n} with two-parameter coefficients, and its base changes.

The two-variable answer is a direct sum of the modules

    {m}_i = R / (Phi_m(q), q^i t + 1)   (m >= 2),    {1}_i = R / (q^i t + 1)

over ``R = Q[q^+-1, t^+-1]``.  Since ``R`` is not a PID the answer is
certified through base changes to PIDs: :func:`specialize_prediction`
turns a prediction into the expected cohomology after ``q -> zeta_d``
(including the Tor correction), after inverting every nonzero polynomial in
``q``, or over ``Q(q, t)``; :func:`compare_cohomology` matches that against
a computation.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import QQ, CyclotomicField, RationalFunctionField, UPoly, divisors
from .rings import LaurentRing
from .salvetti import CyclotomicPoint, FractionField, GenericQ, QMinusOne, Specialization
from .smith import CohomologyGroup, CohomologyModule


class UnsupportedSpecError(ValueError):
    """No universal-coefficient rule is implemented for this base change."""


@dataclass(frozen=True, order=True)
class ModuleSummand:
    """``{m}_i``; equal exactly when ``(m, i)`` agree."""

    m: int
    i: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("cyclotomic index must be positive")

    def __str__(self):
        return f"{{{self.m}}}_{self.i}"


@dataclass(frozen=True)
class CohomologyPrediction:
    """Multiset of summands per degree ``0..n`` (all torsion, no free part)."""

    n: int
    summands: dict = field(default_factory=dict)
    free_rank: int = 0

    def __getitem__(self, degree: int) -> tuple[ModuleSummand, ...]:
        return self.summands.get(degree, ())

    def to_json(self) -> list[dict]:
        return [
            {"degree": i, "summands": [{"m": s.m, "i": s.i} for s in self[i]]}
            for i in range(self.n + 1)
        ]

    @classmethod
    def from_json(cls, data, n: int | None = None) -> "CohomologyPrediction":
        if isinstance(data, str):
            data = json.loads(data)
        summands = {
            int(row["degree"]): tuple(sorted(ModuleSummand(int(s["m"]), int(s["i"])) for s in row["summands"]))
            for row in data
        }
        if n is None:
            n = max(summands, default=0)
        return cls(n, {k: v for k, v in summands.items() if v})

    def __str__(self):
        lines = []
        for i in range(self.n, -1, -1):
            body = " + ".join(str(s) for s in self[i]) or "0"
            lines.append(f"H^{i} = {body}")
        return "\n".join(lines)


def predict_qt(n: int) -> CohomologyPrediction:
    """Cohomology of ``G_{B_n}`` with coefficients in ``R_{q,t}``.

    Divisors d are taken >= 2 in the ``d | n`` clauses; in the ``d !| n``
    clause d = 1 is excluded automatically.

    >>> print(predict_qt(3))
    H^3 = {1}_2 + {3}_0 + {3}_1
    H^2 = {2}_2
    H^1 = 0
    H^0 = 0
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    divs = [d for d in divisors(n) if d >= 2]
    out: dict[int, list[ModuleSummand]] = {}
    out[n] = [ModuleSummand(d, k) for d in divs for k in range(d - 1)] + [ModuleSummand(1, n - 1)]
    j = 1
    while n - 2 * j >= 0:
        # d <= n/(j+1)  <=>  d*(j+1) <= n
        out[n - 2 * j] = [ModuleSummand(d, k) for d in divs if d * (j + 1) <= n for k in range(d - 1)]
        j += 1
    j = 0
    while n - 2 * j - 1 >= 0:
        out[n - 2 * j - 1] = [ModuleSummand(d, n - 1) for d in range(2, n + 1) if n % d and d * (j + 1) <= n]
        j += 1
    return CohomologyPrediction(n, {i: tuple(sorted(v)) for i, v in out.items() if v})


def _t_ring() -> LaurentRing:
    return LaurentRing(QQ, "t")


def invariant_factors(elementary: list, ring) -> tuple:
    """Invariant factors (divisibility order) of a direct sum of ``ring/(f)``, f pairwise coprime or equal.

    Each input is an irreducible normalized factor; equal factors stack.
    """
    counts = Counter(ring.normal(f) for f in elementary)
    if not counts:
        return ()
    top = max(counts.values())
    out = []
    for level in range(top, 0, -1):
        prod = ring.one
        for f in sorted(counts, key=str):
            if counts[f] >= level:
                prod = prod * f
        out.append(ring.normal(prod))
    return tuple(out)


def predict_t(n: int) -> CohomologyModule:
    """Cohomology of ``G_{B_n}`` over ``Q[t^+-1]`` (first n-1 generators act by 1, the last by -t)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ring = _t_ring()
    t = ring.gen()
    groups = {0: CohomologyGroup(0)}
    for k in range(1, n):
        groups[k] = CohomologyGroup(0, (t + 1,))
    groups[n] = CohomologyGroup(0, (t + 1,) if n % 2 else (t * t - 1,))
    return CohomologyModule(ring, groups)


@dataclass(frozen=True)
class AffinePrediction:
    """Cohomology of the affine Artin group ``G_{A~_{n-1}}``.

    ``q_modules[i]`` lists ``(cyclotomic torsion indices, free rank)`` for
    ``H^i(G, Q[q^+-1]_q)``; ``betti[k]`` is ``dim H^k(G, Q)``.
    """

    n: int
    q_modules: dict
    betti: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def predict_affine(n: int) -> AffinePrediction:
    """Read the affine answers off the B_n ones with the degree shift ``H^i <- H^(i+1)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    pred = predict_qt(n)
    qmods = {}
    for i in range(n):
        summands = pred[i + 1]
        qmods[i] = (tuple(sorted(s.m for s in summands if s.m >= 2)), sum(1 for s in summands if s.m == 1))
    rational = predict_t(n)
    betti = tuple(sum(f.degree for f in rational[k + 1].torsion) + rational[k + 1].free_rank for k in range(n))
    return AffinePrediction(n, qmods, betti)


def specialize_prediction(pred: CohomologyPrediction, spec: Specialization) -> CohomologyModule:
    """Expected cohomology after base change along ``spec``.

    For ``q -> zeta_d`` (ring ``S_d``) the universal coefficient sequence
    gives ``H^i(C (x) S_d) = H^i (x) S_d  +  Tor_1(H^(i+1), S_d)``, where
    ``{d}_k`` contributes ``S_d/(zeta^k t + 1)`` to both terms,
    ``{1}_k`` contributes ``S_d/(zeta^k t + 1)`` to the tensor term only, and
    every other summand contributes nothing.  Localizations are flat.
    """
    degrees = range(pred.n + 1)
    if isinstance(spec, (CyclotomicPoint, QMinusOne)):
        if isinstance(spec, QMinusOne):
            d, zeta = 2, Fraction(-1)
        else:
            d, zeta = spec.d, CyclotomicField(spec.d).gen()
        ring = spec.ring

        def lin(k):
            return ring.normal(UPoly([1, zeta**k], ring.field, 0, "t"))

        groups = {}
        for i in degrees:
            pieces = [lin(s.i) for s in pred[i] if s.m == 1 or s.m == d]
            pieces += [lin(s.i) for s in pred[i + 1] if s.m == d and d >= 2]
            groups[i] = CohomologyGroup(0, invariant_factors(pieces, ring))
        return CohomologyModule(ring, groups)
    if isinstance(spec, GenericQ):
        ring = spec.ring
        q = RationalFunctionField("q").gen()
        groups = {}
        for i in degrees:
            pieces = [ring.normal(UPoly([1, q**s.i], ring.field, 0, "t")) for s in pred[i] if s.m == 1]
            groups[i] = CohomologyGroup(0, invariant_factors(pieces, ring))
        return CohomologyModule(ring, groups)
    if isinstance(spec, FractionField):
        return CohomologyModule(spec.ring, {i: CohomologyGroup(0) for i in degrees})
    raise UnsupportedSpecError(f"no base-change rule for {spec!r}")


@dataclass(frozen=True)
class ComparisonReport:
    matches: dict
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"ok": self.ok, "degrees": {str(k): v for k, v in sorted(self.matches.items())}, "mismatches": list(self.mismatches)}


def compare_cohomology(computed: CohomologyModule, expected: CohomologyModule) -> ComparisonReport:
    """Degree-by-degree comparison of free ranks and normalized invariant factors.

    Each expected factor must also divide the computed product exactly, so a
    report never hides a wrong factor behind a matching count.
    """
    if computed.ring != expected.ring:
        raise ValueError(f"cannot compare modules over {computed.ring!r} and {expected.ring!r}")
    ring = computed.ring
    matches, problems = {}, []
    for k in sorted(set(computed.degrees) | set(expected.degrees)):
        c, e = computed[k], expected[k]
        ok = c.free_rank == e.free_rank
        if not ok:
            problems.append(f"H^{k}: free rank {c.free_rank} != expected {e.free_rank}")
        ct = tuple(ring.normal(f) for f in c.torsion) if hasattr(ring, "normal") else c.torsion
        if ct != e.torsion:
            ok = False
            problems.append(
                f"H^{k}: torsion [{', '.join(map(str, ct))}] != expected [{', '.join(map(str, e.torsion))}]"
            )
        elif ct and hasattr(ring, "divmod"):
            prod = ring.one
            for f in ct:
                prod = prod * f
            for f in e.torsion:
                if ring.divmod(prod, f)[1]:
                    ok = False
                    problems.append(f"H^{k}: expected factor {f} does not divide the computed torsion")
        matches[k] = ok
    return ComparisonReport(matches, tuple(problems))
