"""First page of the spectral sequence of the trailing-ones filtration.

Column s of ``E_1`` is the cohomology of ``F^s C_n / F^(s+1) C_n``, which is
the ``A_{n-s-1}`` complex shifted by s; with t acting trivially there it is
``H^r(G_{A_{n-s-1}}, Q[q^+-1]_q)[t^+-1]``, a sum of ``R/Phi_m(q)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import QQ, BiLaurent, cyclotomic, q_number, qt_binomial_mod
from .rings import LaurentRing
from .salvetti import TValue, build_complex, coboundary_coefficient, specialize_complex
from .smith import complex_cohomology


@dataclass(frozen=True)
class E1Page:
    """``entries[(s, r)]`` lists the cyclotomic indices m of ``{m}[t^+-1]`` at that spot."""

    n: int
    entries: dict = field(default_factory=dict)
    free: tuple[tuple[int, int], ...] = ()

    def __getitem__(self, pos: tuple[int, int]) -> tuple[int, ...]:
        return self.entries.get(pos, ())

    def column(self, s: int) -> dict[int, tuple[int, ...]]:
        return {r: ms for (c, r), ms in self.entries.items() if c == s}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"s": s, "r": r, "m": list(ms)} for (s, r), ms in sorted(self.entries.items())],
            "free": [{"s": s, "r": r} for s, r in self.free],
        }

    @classmethod
    def from_json(cls, data) -> "E1Page":
        if isinstance(data, str):
            data = json.loads(data)
        entries = {(e["s"], e["r"]): tuple(e["m"]) for e in data["entries"]}
        return cls(data["n"], entries, tuple((f["s"], f["r"]) for f in data["free"]))


def e1_prediction(n: int) -> E1Page:
    """Positions of the torsion modules ``{m}[t^+-1]`` and the two free spots.

    For ``0 <= s <= n-2`` and ``m >= 2``, ``{m}`` sits at ``(s, r)`` when

    (a) ``m | n-s-1`` and ``r = n-s-2(n-s-1)/m``, or
    (b) ``m | n-s``   and ``r = n-s+1-2(n-s)/m``.

    >>> e1_prediction(3).column(0)
    {1: (2,), 2: (3,)}
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    entries: dict[tuple[int, int], list[int]] = {}
    for s in range(n - 1):
        a, b = n - s - 1, n - s
        for m in range(2, b + 1):
            if a % m == 0:
                entries.setdefault((s, n - s - 2 * a // m), []).append(m)
            if b % m == 0:
                entries.setdefault((s, n - s + 1 - 2 * b // m), []).append(m)
    return E1Page(n, {k: tuple(sorted(v)) for k, v in sorted(entries.items())}, ((n - 1, 0), (n, 0)))


@dataclass(frozen=True)
class E1Check:
    s: int
    r: int
    expected: tuple[int, ...]
    torsion: tuple[str, ...]
    free_rank: int
    ok: bool


@dataclass(frozen=True)
class E1Report:
    n: int
    checks: tuple[E1Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def a_complex_cohomology(k: int):
    """``H^*(G_{A_k}, Q[q^+-1]_q)`` by Smith normal form (the A complex is t-free)."""
    cx = build_complex("A", k)
    return complex_cohomology(specialize_complex(cx, TValue(Fraction(1))))


def verify_e1(n: int) -> E1Report:
    """Compare every torsion spot of :func:`e1_prediction` with a direct computation.

    At ``(s, r)`` the product of the computed invariant factors of
    ``H^r(A_{n-s-1})`` must equal ``prod Phi_m`` over the predicted m, with
    no free part.
    """
    page = e1_prediction(n)
    ring = LaurentRing(QQ, "q")
    checks = []
    for s in range(n - 1):
        k = n - s - 1
        h = a_complex_cohomology(k)
        for r in range(k + 1):
            ms = page[(s, r)]
            want = ring.one
            for m in ms:
                want = want * cyclotomic(m).with_var("q")
            got = ring.one
            for f in h[r].torsion:
                got = got * f
            ok = h[r].free_rank == 0 and ring.normal(got) == ring.normal(want)
            checks.append(E1Check(s, r, ms, tuple(str(f) for f in h[r].torsion), h[r].free_rank, ok))
    return E1Report(n, tuple(checks))


def d1_closed_form(s: int) -> BiLaurent:
    """``[s+1]_q (1 + q^s t)``."""
    q, t = BiLaurent.q(), BiLaurent.t()
    return q_number(s + 1) * (1 + q**s * t)


def d1_coefficient(n: int, s: int) -> BiLaurent:
    """The coefficient attaching node ``n-s`` to the string ``0^(n-s-1) 1^s``, read off the B_n complex."""
    if not 0 <= s <= n - 1:
        raise ValueError(f"need 0 <= s <= n-1, got s={s}, n={n}")
    gamma = tuple(range(n - s + 1, n + 1))
    sign, coeff = coboundary_coefficient("B", n, gamma, n - s)
    assert sign == 1
    return coeff


def at_q_minus_one(x: BiLaurent):
    return x.to_upoly("t", Fraction(-1))


def d2_coefficient_at_q_minus_one(s: int):
    """The modified binomial ``(s+2, s)`` at ``q = -1``, as a polynomial in t."""
    return at_q_minus_one(qt_binomial_mod(s + 2, s))
