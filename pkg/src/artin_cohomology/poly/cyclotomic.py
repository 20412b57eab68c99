"""Cyclotomic polynomials and the fields ``Q[x]/Phi_d``."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .upoly import QQ, UPoly, poly_xgcd


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic(m: int, var: str = "x") -> UPoly:
    """The m-th cyclotomic polynomial over QQ.

    Obtained by dividing ``x^m - 1`` exactly by the cyclotomic polynomials
    of the proper divisors of ``m``.

    >>> print(cyclotomic(6))
    1 - x + x^2
    """
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = UPoly.monomial(1, m, var=var) - 1
    for d in divisors(m)[:-1]:
        num = num.exact_div(cyclotomic(d, var))
    return num


def euler_phi(m: int) -> int:
    return cyclotomic(m).degree


class CyclotomicField:
    """``F_d = Q[x]/Phi_d(x)``; the class of ``x`` is a primitive d-th root of unity."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("conductor must be positive")
        self.d = d
        self.modulus = cyclotomic(d)
        self.zero = CyclotomicElement(d, UPoly())
        self.one = CyclotomicElement(d, UPoly.const(1))
        self.name = f"QQ(z{d})"

    def __call__(self, x) -> "CyclotomicElement":
        if isinstance(x, CyclotomicElement):
            if x.d != self.d:
                raise TypeError(f"element of F{x.d} coerced into F{self.d}")
            return x
        if isinstance(x, UPoly):
            return CyclotomicElement(self.d, x)
        return CyclotomicElement(self.d, UPoly.const(Fraction(x)))

    def gen(self) -> "CyclotomicElement":
        """The primitive root of unity ``zeta_d``."""
        return CyclotomicElement(self.d, UPoly.x())

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.d == self.d

    def __hash__(self):
        return hash(("F", self.d))

    def __repr__(self):
        return f"CyclotomicField({self.d})"


class CyclotomicElement:
    """Element of ``Q[x]/Phi_d`` kept as its reduced representative."""

    __slots__ = ("d", "rep")

    def __init__(self, d: int, rep: UPoly):
        if rep.var != "x":
            rep = rep.with_var("x")
        if not rep.is_polynomial:
            # x is a unit mod Phi_d: x^-1 = x^(d-1)
            rep = rep.shift(-rep.val) * UPoly.monomial(1, (-rep.val) * (d - 1))
        self.d = d
        self.rep = rep % cyclotomic(d)

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.d != self.d:
                raise TypeError(f"F{self.d} and F{other.d} elements do not mix")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.d, UPoly.const(Fraction(other)))
        return NotImplemented

    def __bool__(self):
        return bool(self.rep)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElement(self.d, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.d, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElement(self.d, self.rep - other.rep)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElement(self.d, self.rep * other.rep)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if not self.rep:
            raise ZeroDivisionError(f"inverse of zero in F{self.d}")
        g, s, _ = poly_xgcd(self.rep, cyclotomic(self.d))
        # Phi_d irreducible, so g == 1
        assert g == 1
        return CyclotomicElement(self.d, s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicElement(self.d, UPoly.const(1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.rep == other.rep

    def __hash__(self):
        return hash((self.d, self.rep))

    def __str__(self):
        return str(self.rep.with_var(f"z{self.d}"))

    def __repr__(self):
        return f"CyclotomicElement({self.d}, {self})"


def cyclotomic_field_inverse(x: CyclotomicElement) -> CyclotomicElement:
    """Inverse in ``Q[x]/Phi_d`` via the extended Euclidean algorithm."""
    return x.inverse()
