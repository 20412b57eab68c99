"""Weighted Salvetti cochain complexes for the Artin groups of type A_n and B_n.

Generators of degree k are the k-subsets of ``{1..n}``, ordered
lexicographically as sorted tuples (so ``{1} < {2}`` and
``{1,2} < {1,3} < {2,3}``).  A coboundary ``delta^k`` is stored as a
``rank C^(k+1) x rank C^k`` matrix acting on column vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .coxeter import parabolic_poincare, path_components
from .poly import (
    QQ,
    BiLaurent,
    CyclotomicField,
    RationalFunctionField,
    q_binomial,
    qt_binomial_mod,
)
from .rings import (
    R_QT,
    FieldRing,
    FractionFieldRing,
    LaurentRing,
    Matrix,
    matmul,
)

Subset = tuple[int, ...]


def to_bitstring(gamma: Sequence[int], n: int) -> str:
    """Characteristic string of ``gamma``: position i is '1' iff i+1 is in gamma."""
    s = set(gamma)
    return "".join("1" if i in s else "0" for i in range(1, n + 1))


def from_bitstring(bits: str) -> Subset:
    return tuple(i + 1 for i, b in enumerate(bits) if b == "1")


def basis(n: int, k: int) -> list[Subset]:
    return list(combinations(range(1, n + 1), k))


@dataclass(frozen=True)
class FreeCochainComplex:
    """Free cochain complex ``C^lo -> C^(lo+1) -> ...`` over ``ring``.

    ``coboundaries[k]`` maps degree ``lo + k`` to ``lo + k + 1``.
    """

    ring: object
    ranks: tuple[int, ...]
    coboundaries: tuple[Matrix, ...]
    bases: tuple[tuple, ...] = ()
    lo: int = 0
    label: str = ""

    def __post_init__(self):
        if len(self.coboundaries) != max(len(self.ranks) - 1, 0):
            raise ValueError("need one coboundary between consecutive degrees")
        for k, d in enumerate(self.coboundaries):
            if d.shape != (self.ranks[k + 1], self.ranks[k]):
                raise ValueError(f"coboundary {k} has shape {d.shape}, expected {(self.ranks[k + 1], self.ranks[k])}")

    @property
    def degrees(self) -> range:
        return range(self.lo, self.lo + len(self.ranks))

    def rank(self, degree: int) -> int:
        k = degree - self.lo
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def coboundary(self, degree: int) -> Matrix:
        """``delta^degree``; an empty matrix outside the stored range."""
        k = degree - self.lo
        if 0 <= k < len(self.coboundaries):
            return self.coboundaries[k]
        return Matrix.zeros(self.rank(degree + 1), self.rank(degree), self.ring)

    def square_defects(self) -> list[int]:
        """Degrees k where ``delta^(k+1) delta^k`` is nonzero."""
        bad = []
        for k in range(len(self.coboundaries) - 1):
            if not matmul(self.coboundaries[k + 1], self.coboundaries[k], self.ring).is_zero():
                bad.append(self.lo + k)
        return bad

    def check_square_zero(self) -> None:
        bad = self.square_defects()
        if bad:
            raise ArithmeticError(f"delta o delta != 0 in degrees {bad} of {self.label}")

    def to_json(self) -> dict:
        """Ranks, bases and coboundaries with entries in canonical text form."""
        return {
            "label": self.label,
            "ring": repr(self.ring),
            "lo": self.lo,
            "ranks": list(self.ranks),
            "bases": [[list(g) for g in b] for b in self.bases],
            "coboundaries": [[[str(x) for x in row] for row in d.rows] for d in self.coboundaries],
        }

    @classmethod
    def from_json(cls, data) -> "FreeCochainComplex":
        """Inverse of :meth:`to_json` for complexes over ``Q[q^+-1, t^+-1]``."""
        if isinstance(data, str):
            data = json.loads(data)
        if data["ring"] != repr(R_QT):
            raise ValueError(f"can only read complexes over {R_QT!r}, got {data['ring']}")
        ranks = tuple(data["ranks"])
        mats = tuple(
            Matrix.from_rows([[BiLaurent.parse(x) for x in row] for row in d], ranks[k])
            for k, d in enumerate(data["coboundaries"])
        )
        bases = tuple(tuple(tuple(g) for g in b) for b in data["bases"])
        return cls(R_QT, ranks, mats, bases, data["lo"], data["label"])


# -- coefficients ----------------------------------------------------------


@lru_cache(maxsize=None)
def coboundary_coefficient(family: str, n: int, gamma: Subset, j: int) -> tuple[int, BiLaurent]:
    """Sign and coefficient of ``Gamma u {j}`` in ``delta(Gamma)``.

    The sign is ``(-1)^#{g in Gamma : g < j}``; the coefficient is the
    ratio ``W_{Gamma u {j}} / W_Gamma``, evaluated in closed form from the
    component of j and cross-checked against the exact Poincare ratio.
    """
    gamma = tuple(sorted(gamma))
    if j in gamma:
        raise ValueError(f"{j} already lies in {gamma}")
    if not 1 <= j <= n:
        raise ValueError(f"{j} is not a node of a rank-{n} diagram")
    sign = -1 if sum(1 for g in gamma if g < j) % 2 else 1
    comp = next(c for c in path_components(gamma + (j,)) if j in c)
    m = len(comp)
    i = sum(1 for g in comp if g > j)
    if family == "B" and comp[-1] == n:
        coeff = qt_binomial_mod(m, i)
    else:
        coeff = q_binomial(m + 1, i + 1)
    ratio = parabolic_poincare(family, n, gamma + (j,)).exact_div(parabolic_poincare(family, n, gamma))
    if ratio != coeff:
        raise ArithmeticError(f"closed-form coefficient disagrees with Poincare ratio at {family}{n}, {gamma}, {j}")
    return sign, coeff


@lru_cache(maxsize=None)
def build_complex(family: str, n: int) -> FreeCochainComplex:
    """The complex over ``Q[q^+-1, t^+-1]`` for ``A_n`` or ``B_n``; checks ``delta o delta = 0``."""
    if family not in ("A", "B"):
        raise ValueError(f"family must be 'A' or 'B', got {family!r}")
    if n < 1:
        raise ValueError("rank must be at least 1")
    bases = [basis(n, k) for k in range(n + 1)]
    mats = []
    zero = R_QT.zero
    for k in range(n):
        src, dst = bases[k], bases[k + 1]
        pos = {g: r for r, g in enumerate(dst)}
        rows = [[zero] * len(src) for _ in dst]
        for c, gamma in enumerate(src):
            for j in range(1, n + 1):
                if j in gamma:
                    continue
                sign, coeff = coboundary_coefficient(family, n, gamma, j)
                target = tuple(sorted(gamma + (j,)))
                rows[pos[target]][c] = coeff if sign > 0 else -coeff
        mats.append(Matrix.from_rows(rows, len(src)))
    cx = FreeCochainComplex(
        R_QT, tuple(comb(n, k) for k in range(n + 1)), tuple(mats), tuple(tuple(b) for b in bases), 0, f"{family}{n}"
    )
    cx.check_square_zero()
    return cx


# -- specializations -------------------------------------------------------


class Specialization:
    """A ring map out of ``Q[q^+-1, t^+-1]``."""

    ring: object

    def __call__(self, x: BiLaurent):
        raise NotImplementedError


@dataclass(frozen=True)
class QMinusOne(Specialization):
    """``q -> -1``, landing in ``Q[t^+-1]``."""

    @property
    def ring(self):
        return LaurentRing(QQ, "t")

    def __call__(self, x):
        return x.to_upoly("t", Fraction(-1), QQ)


@dataclass(frozen=True)
class CyclotomicPoint(Specialization):
    """``q -> zeta_d``, landing in ``F_d[t^+-1]`` with ``F_d = Q[q]/Phi_d``."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("conductor must be positive")

    @property
    def ring(self):
        return LaurentRing(CyclotomicField(self.d), "t")

    def __call__(self, x):
        f = CyclotomicField(self.d)
        return x.to_upoly("t", f.gen(), f)


@dataclass(frozen=True)
class GenericQ(Specialization):
    """Base change to ``Q(q)[t^+-1]`` (flat)."""

    @property
    def ring(self):
        return LaurentRing(RationalFunctionField("q"), "t")

    def __call__(self, x):
        f = RationalFunctionField("q")
        return x.to_upoly("t", f.gen(), f)


@dataclass(frozen=True)
class FractionField(Specialization):
    """Base change to the full fraction field ``Q(q, t)``."""

    @property
    def ring(self):
        return FractionFieldRing(GenericQ().ring, "QQ(q, t)")

    def __call__(self, x):
        return GenericQ()(x)


@dataclass(frozen=True)
class TValue(Specialization):
    """``t -> value`` (nonzero rational), landing in ``Q[q^+-1]``."""

    t: Fraction

    def __post_init__(self):
        if Fraction(self.t) == 0:
            raise ValueError("t must specialize to a unit")

    @property
    def ring(self):
        return LaurentRing(QQ, "q")

    def __call__(self, x):
        return x.to_upoly("q", Fraction(self.t), QQ)


@dataclass(frozen=True)
class RationalPoint(Specialization):
    """``(q, t) -> (a, b)`` with nonzero rationals, landing in ``Q``."""

    q: Fraction
    t: Fraction

    def __post_init__(self):
        if Fraction(self.q) == 0 or Fraction(self.t) == 0:
            raise ValueError("evaluation point must have nonzero coordinates")

    @property
    def ring(self):
        return FieldRing(QQ)

    def __call__(self, x):
        return Fraction(x.evaluate(Fraction(self.q), Fraction(self.t)))


def parse_specialization(text: str) -> Specialization:
    """``q=-1``, ``d=3``, ``generic``, ``frac``, ``t=2``, or ``point:2,3/5``."""
    text = text.strip()
    if text in ("q=-1", "qm1"):
        return QMinusOne()
    if text == "generic":
        return GenericQ()
    if text in ("frac", "fraction-field"):
        return FractionField()
    if text.startswith("d="):
        return CyclotomicPoint(int(text[2:]))
    if text.startswith("t="):
        return TValue(Fraction(text[2:]))
    if text.startswith("point:"):
        a, b = text[6:].split(",")
        return RationalPoint(Fraction(a), Fraction(b))
    raise ValueError(f"unknown specialization {text!r}")


def specialize_complex(complex_: FreeCochainComplex, spec: Specialization) -> FreeCochainComplex:
    """Entrywise image of every coboundary under ``spec``; ``delta o delta = 0`` is re-checked."""
    if complex_.ring != R_QT:
        raise TypeError("only complexes over Q[q^+-1, t^+-1] can be specialized")
    cache: dict[BiLaurent, object] = {}

    def image(x):
        if x not in cache:
            cache[x] = spec(x)
        return cache[x]

    mats = tuple(d.map(image) for d in complex_.coboundaries)
    ring = spec.ring
    out = FreeCochainComplex(ring, complex_.ranks, mats, complex_.bases, complex_.lo, f"{complex_.label}@{spec}")
    check_ring = ring.base if isinstance(ring, FractionFieldRing) else ring
    for k in range(len(mats) - 1):
        if not matmul(mats[k + 1], mats[k], check_ring).is_zero():
            raise ArithmeticError(f"specialization {spec} broke delta o delta = 0")
    return out


# -- filtration -------------------------------------------------------------


def filtration_level(gamma: Subset, n: int) -> int:
    """Number of trailing ones of the characteristic string."""
    s = 0
    while s < n and (n - s) in gamma:
        s += 1
    return s


def filtration_subcomplex(n: int, s: int) -> list[list[int]]:
    """Per degree, the basis indices spanning ``F^s C_n`` (strings ending in ``1^s``)."""
    cx = build_complex("B", n)
    return [[r for r, g in enumerate(b) if filtration_level(g, n) >= s] for b in cx.bases]


@dataclass(frozen=True)
class FiltrationQuotient:
    n: int
    s: int
    complex: FreeCochainComplex
    reference: FreeCochainComplex
    mismatches: tuple[int, ...] = field(default=())

    @property
    def matches(self) -> bool:
        return not self.mismatches


def filtration_quotient(n: int, s: int) -> FiltrationQuotient:
    """``F^s C_n / F^(s+1) C_n`` with degrees shifted by s, compared with the A_{n-s-1} complex.

    The quotient keeps strings ending in exactly s ones; its matrices are
    submatrices of the B_n complex, so signs are inherited rather than
    recomputed.
    """
    if not 0 <= s <= n - 2:
        raise ValueError(f"filtration step must satisfy 0 <= s <= n-2, got s={s}, n={n}")
    full = build_complex("B", n)
    idx = [[r for r, g in enumerate(b) if filtration_level(g, n) == s] for b in full.bases]
    # degrees s .. n-1 carry the quotient (ones in the last s slots, a zero at n-s)
    degs = list(range(s, n))
    mats = tuple(full.coboundaries[k].submatrix(idx[k + 1], idx[k]) for k in degs[:-1])
    bases = tuple(tuple(tuple(x for x in full.bases[k][r] if x < n - s) for r in idx[k]) for k in degs)
    quot = FreeCochainComplex(R_QT, tuple(len(idx[k]) for k in degs), mats, bases, s, f"F^{s}B{n}/F^{s + 1}")
    ref = build_complex("A", n - s - 1)
    bad = []
    for k, (a, b) in enumerate(zip(quot.coboundaries, ref.coboundaries)):
        if a != b:
            bad.append(s + k)
    if quot.ranks != ref.ranks or quot.bases != ref.bases:
        bad.append(-1)
    return FiltrationQuotient(n, s, quot, ref, tuple(bad))
