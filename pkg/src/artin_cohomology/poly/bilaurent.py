"""Exact Laurent polynomials in two variables over the rationals.

Terms are stored sparsely as ``{(a, b): c}`` for ``c * q^a * t^b``.  The
variable names default to ``("q", "t")`` and may be renamed (the braid
representations use ``u``); arithmetic refuses to mix differently named
rings.

Canonical text lists terms in increasing lexicographic order of ``(a, b)``:

>>> q, t = BiLaurent.q(), BiLaurent.t()
>>> print((1 + q) * (1 + q * t))
1 + q + q*t + q^2*t
>>> print(BiLaurent.parse("1 + q*t^-1 - 3*q^2"))
1 + q*t^-1 - 3*q^2
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .upoly import InexactDivisionError, QQ, UPoly, format_terms, monomial_str

Exps = tuple[int, int]


class BiLaurent:
    """Immutable element of ``Q[q^+-1, t^+-1]``."""

    __slots__ = ("_terms", "names", "_hash")

    def __init__(self, terms: Mapping[Exps, object] | None = None, names: tuple[str, str] = ("q", "t")):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[(int(e[0]), int(e[1]))] = c
        self._terms = clean
        self.names = tuple(names)
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c, names=("q", "t")) -> "BiLaurent":
        return cls({(0, 0): c}, names)

    @classmethod
    def monomial(cls, a: int, b: int, c=1, names=("q", "t")) -> "BiLaurent":
        return cls({(a, b): c}, names)

    @classmethod
    def q(cls) -> "BiLaurent":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BiLaurent":
        return cls({(0, 1): 1})

    @classmethod
    def zero(cls, names=("q", "t")) -> "BiLaurent":
        return cls(None, names)

    @classmethod
    def one(cls, names=("q", "t")) -> "BiLaurent":
        return cls({(0, 0): 1}, names)

    # -- access -----------------------------------------------------------

    @property
    def terms(self) -> dict[Exps, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exps, Fraction]]:
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def exponent_box(self) -> tuple[int, int, int, int]:
        """``(min_a, max_a, min_b, max_b)`` over the support."""
        if not self._terms:
            raise ValueError("zero polynomial has empty support")
        a = [e[0] for e in self._terms]
        b = [e[1] for e in self._terms]
        return min(a), max(a), min(b), max(b)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def free_of(self, name: str) -> bool:
        k = self.names.index(name)
        return all(e[k] == 0 for e in self._terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "BiLaurent":
        if isinstance(other, BiLaurent):
            if other.names != self.names:
                raise TypeError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return BiLaurent.const(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return BiLaurent(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent({e: -c for e, c in self._terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return BiLaurent(out, self.names)

    __rmul__ = __mul__

    def inverse(self) -> "BiLaurent":
        """Inverse of a unit (nonzero monomial)."""
        if not self.is_monomial:
            raise ZeroDivisionError(f"{self} is not a unit")
        ((a, b), c), = self._terms.items()
        return BiLaurent({(-a, -b): 1 / c}, self.names)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = BiLaurent.one(self.names)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other) -> "BiLaurent":
        """Exact quotient; raises :class:`InexactDivisionError` otherwise.

        Lexicographic long division.  The quotient's support must lie in the
        box of exponent differences (Newton polytopes add), which bounds the
        loop when the division is not exact.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return self
        sa0, sa1, sb0, sb1 = self.exponent_box()
        oa0, oa1, ob0, ob1 = other.exponent_box()
        lo_a, hi_a, lo_b, hi_b = sa0 - oa0, sa1 - oa1, sb0 - ob0, sb1 - ob1
        lead = max(other._terms)
        lead_c = other._terms[lead]
        rem = dict(self._terms)
        quot = {}
        while rem:
            top = max(rem)
            e = (top[0] - lead[0], top[1] - lead[1])
            if not (lo_a <= e[0] <= hi_a and lo_b <= e[1] <= hi_b):
                raise InexactDivisionError(f"({self}) / ({other}) is not exact")
            c = rem[top] / lead_c
            quot[e] = c
            for (a, b), v in other._terms.items():
                k = (a + e[0], b + e[1])
                w = rem.get(k, 0) - c * v
                if w:
                    rem[k] = w
                else:
                    rem.pop(k, None)
        return BiLaurent(quot, self.names)

    def divides(self, other) -> bool:
        try:
            other.exact_div(self)
        except InexactDivisionError:
            return False
        return True

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BiLaurent):
            return self.names == other.names and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0, 0): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation and specialization ------------------------------------

    def evaluate(self, x, y):
        """Value at ``(q, t) = (x, y)`` in any ring with ``+``, ``*``, ``**``."""
        total = 0
        px: dict[int, object] = {}
        py: dict[int, object] = {}
        for (a, b), c in self._terms.items():
            if a not in px:
                px[a] = x**a
            if b not in py:
                py[b] = y**b
            total = total + px[a] * py[b] * c
        return total

    def subs(self, values: Mapping[str, "BiLaurent"]) -> "BiLaurent":
        """Substitute BiLaurents for variables; a variable left out stays put when the rings agree."""
        x = values.get(self.names[0])
        y = values.get(self.names[1])
        target = next(v.names for v in values.values())
        one = BiLaurent.one(target)
        same = target == self.names
        if x is None:
            if same:
                x = BiLaurent.monomial(1, 0, names=target)
            elif not self.free_of(self.names[0]):
                raise ValueError(f"no value given for {self.names[0]}")
            else:
                x = one
        if y is None:
            if same:
                y = BiLaurent.monomial(0, 1, names=target)
            elif not self.free_of(self.names[1]):
                raise ValueError(f"no value given for {self.names[1]}")
            else:
                y = one
        result = self.evaluate(x, y)
        return result if isinstance(result, BiLaurent) else BiLaurent.const(result, target)

    def to_upoly(self, keep: str, other_value, field=QQ, var: str | None = None) -> UPoly:
        """Image in ``field[keep^+-1]`` after fixing the other variable.

        ``other_value`` is a field element (e.g. ``-1``, a root of unity in a
        cyclotomic field, or the generator of ``Q(q)``).
        """
        k = self.names.index(keep)
        buckets: dict[int, object] = {}
        powers: dict[int, object] = {}
        other_value = field(other_value)
        for e, c in self._terms.items():
            a, b = e[1 - k], e[k]
            if a not in powers:
                powers[a] = other_value**a
            buckets[b] = buckets.get(b, field.zero) + powers[a] * field(c)
        if not buckets:
            return UPoly([], field, 0, var or keep)
        lo, hi = min(buckets), max(buckets)
        coeffs = [buckets.get(e, field.zero) for e in range(lo, hi + 1)]
        return UPoly(coeffs, field, lo, var or keep)

    # -- text -------------------------------------------------------------

    def __str__(self):
        x, y = self.names

        def mono(a, b):
            parts = [p for p in (monomial_str(x, a), monomial_str(y, b)) if p]
            return "*".join(parts)

        return format_terms((c, mono(a, b)) for (a, b), c in self.items())

    def __repr__(self):
        return f"BiLaurent({str(self)!r})"

    @classmethod
    def parse(cls, text: str, names: tuple[str, str] = ("q", "t")) -> "BiLaurent":
        """Parse the canonical grammar, e.g. ``"1 + q*t^-1 - 3/2*q^2"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        # split at +/- that are not exponent signs
        pieces = re.split(r"(?<!\^)(?=[+-])", s)
        result: dict[Exps, Fraction] = {}
        for piece in pieces:
            if not piece:
                continue
            sign = 1
            while piece and piece[0] in "+-":
                if piece[0] == "-":
                    sign = -sign
                piece = piece[1:]
            if not piece:
                raise ValueError(f"dangling sign in {text!r}")
            coeff = Fraction(sign)
            a = b = 0
            for factor in piece.split("*"):
                m = _FACTOR.fullmatch(factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                if m.group("num") is not None:
                    coeff *= Fraction(m.group("num"))
                    continue
                var = m.group("var")
                e = int(m.group("exp")) if m.group("exp") is not None else 1
                if var == names[0]:
                    a += e
                elif var == names[1]:
                    b += e
                else:
                    raise ValueError(f"unknown variable {var!r} in {text!r}")
            result[(a, b)] = result.get((a, b), 0) + coeff
        return cls(result, names)


_FACTOR = re.compile(r"(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z]\w*)(?:\^(?P<exp>[+-]?\d+))?")
