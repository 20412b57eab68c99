"""Univariate Laurent polynomials over an exact field.

A :class:`UPoly` stores a dense coefficient tuple together with the exponent
of its lowest term, so ordinary polynomials are simply the ones with
``val >= 0``.  Coefficients live in a field object (``QQ``, a cyclotomic
field, or a rational-function field); the field supplies ``zero``, ``one``
and coercion.

>>> x = UPoly.x()
>>> print((x + 1) ** 2)
1 + 2*x + x^2
>>> print(UPoly([1, 1], val=-1, var="t"))
t^-1 + 1
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

_NUMBER = re.compile(r"-?\d+(/\d+)?")


class InexactDivisionError(ArithmeticError):
    """An exact division left a nonzero remainder (always an internal bug)."""


class RationalField:
    """The field of rationals, with elements represented by ``Fraction``."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def coeff_str(c) -> tuple[str, bool]:
    """Printable form of a coefficient and whether it is a bare number."""
    s = str(c)
    return s, isinstance(c, (int, Fraction)) or _NUMBER.fullmatch(s) is not None


def format_terms(terms: Iterable[tuple[object, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs into canonical ``a + b - c`` text.

    ``monomial`` is the empty string for the constant term.
    """
    out = []
    for c, mono in terms:
        s, atomic = coeff_str(c)
        neg = False
        if atomic and s.startswith("-"):
            neg, s = True, s[1:]
        if not atomic:
            s = "(" + s + ")"
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


def monomial_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


class UPoly:
    """Immutable univariate Laurent polynomial ``sum c_k var^(val+k)``."""

    __slots__ = ("field", "coeffs", "val", "var", "_hash")

    def __init__(self, coeffs: Iterable = (), field=QQ, val: int = 0, var: str = "x"):
        cs = [field(c) for c in coeffs]
        hi = len(cs)
        while hi and not cs[hi - 1]:
            hi -= 1
        lo = 0
        while lo < hi and not cs[lo]:
            lo += 1
        self.field = field
        self.coeffs = tuple(cs[lo:hi])
        self.val = val + lo if self.coeffs else 0
        self.var = var
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def x(cls, field=QQ, var: str = "x") -> "UPoly":
        return cls([field.one], field, 1, var)

    @classmethod
    def const(cls, c, field=QQ, var: str = "x") -> "UPoly":
        return cls([c], field, 0, var)

    @classmethod
    def monomial(cls, c, e: int, field=QQ, var: str = "x") -> "UPoly":
        return cls([c], field, e, var)

    def _new(self, coeffs, val=0) -> "UPoly":
        return UPoly(coeffs, self.field, val, self.var)

    def _coerce(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise TypeError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        return UPoly([other], self.field, 0, self.var)

    # -- basic properties -------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        return self.val + len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def span(self) -> int:
        """``degree - val``: the Euclidean norm on the Laurent ring."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    @property
    def is_polynomial(self) -> bool:
        return self.val >= 0 or not self.coeffs

    @property
    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def coefficient(self, e: int):
        k = e - self.val
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def items(self):
        """Nonzero ``(exponent, coefficient)`` pairs in increasing order."""
        return [(self.val + k, c) for k, c in enumerate(self.coeffs) if c]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if not other:
            return self
        if not self:
            return other
        lo = min(self.val, other.val)
        hi = max(self.degree, other.degree)
        zero = self.field.zero
        out = [zero] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.val - lo + k] = c
        for k, c in enumerate(other.coeffs):
            i = other.val - lo + k
            out[i] = out[i] + c
        return self._new(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs], self.val)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return self._new([])
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._new(out, self.val + other.val)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self._new([self.field.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "UPoly":
        """Multiply by ``var**k``."""
        return self._new(self.coeffs, self.val + k)

    def scale(self, c) -> "UPoly":
        c = self.field(c)
        return self._new([c * a for a in self.coeffs], self.val)

    def inverse(self) -> "UPoly":
        """Inverse of a unit of the Laurent ring (a nonzero monomial)."""
        if not self.is_monomial:
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        return self._new([self.field.one / self.coeffs[0]], -self.val)

    def monic(self) -> "UPoly":
        if not self:
            return self
        return self.scale(self.field.one / self.lc)

    def unit_normal(self) -> "UPoly":
        """Ordinary monic polynomial with nonzero constant term (Laurent normal form)."""
        if not self:
            return self
        return self.shift(-self.val).monic()

    def __divmod__(self, other):
        """Polynomial long division; both operands must be polynomials."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not (self.is_polynomial and other.is_polynomial):
            raise ValueError("long division needs ordinary polynomials")
        a = [self.coefficient(e) for e in range(self.degree + 1)] if self else []
        b = [other.coefficient(e) for e in range(other.degree + 1)]
        db = len(b) - 1
        inv_lc = self.field.one / b[-1]
        zero = self.field.zero
        if len(a) <= db:
            return self._new([]), self
        quot = [zero] * (len(a) - db)
        for k in range(len(a) - 1, db - 1, -1):
            c = a[k]
            if not c:
                continue
            c = c * inv_lc
            quot[k - db] = c
            for i in range(db + 1):
                a[k - db + i] = a[k - db + i] - c * b[i]
        return self._new(quot), self._new(a[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UPoly":
        """Exact quotient in the Laurent ring; raises on a nonzero remainder."""
        other = self._coerce(other)
        if not self:
            return self
        a = self.shift(-self.val)
        b = other.shift(-other.val)
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"({self}) / ({other}) is not exact")
        return q.shift(self.val - other.val)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.field == other.field and self.val == other.val and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return self.val == 0 and len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.val, self.coeffs))
        return self._hash

    def __call__(self, x):
        """Evaluate at ``x`` (any ring element supporting ``+``, ``*`` and ``**``)."""
        if not self:
            return self.field.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc * x**self.val if self.val else acc

    def map_coeffs(self, f, field) -> "UPoly":
        return UPoly([f(c) for c in self.coeffs], field, self.val, self.var)

    def with_var(self, var: str) -> "UPoly":
        return UPoly(self.coeffs, self.field, self.val, var)

    def __str__(self):
        return format_terms((c, monomial_str(self.var, e)) for e, c in self.items())

    def __repr__(self):
        return f"UPoly({self})"


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd of two ordinary polynomials."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    one = UPoly.const(a.field.one, a.field, a.var)
    zero = UPoly([], a.field, 0, a.var)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = a.field.one / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)
