"""The rational function field ``Q(q)``: reduced fractions of polynomials."""

from __future__ import annotations

from fractions import Fraction

from .upoly import QQ, UPoly, poly_gcd


class RationalFunction:
    """``num/den`` with ``gcd(num, den) == 1`` and ``den`` monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: UPoly, den: UPoly | None = None, var: str = "q"):
        if den is None:
            den = UPoly.const(1, var=var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        # clear Laurent powers into the denominator/numerator
        if num and num.val < 0:
            den = den.shift(-num.val)
            num = num.shift(-num.val)
        if den.val < 0:
            num = num.shift(-den.val)
            den = den.shift(-den.val)
        if not num:
            den = UPoly.const(1, var=var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        self.num = num.scale(1 / lc).with_var(var)
        self.den = den.scale(1 / lc).with_var(var)
        self._hash = None

    @property
    def var(self) -> str:
        return self.num.var

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction(UPoly.const(other, var=self.var), var=self.var)
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den, self.var)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.var)

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
        return RationalFunction(self.num * other.num, self.den * other.den, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num, self.var)

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
        return RationalFunction(self.num**e, self.den**e, self.var)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.den.is_monomial:
            # monic monomial denominator: print as a Laurent polynomial
            return str(self.num.shift(-self.den.degree))
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


class RationalFunctionField:
    """``Q(var)``, the fraction field of ``Q[var]``."""

    def __init__(self, var: str = "q"):
        self.var = var
        self.zero = RationalFunction(UPoly(var=var), var=var)
        self.one = RationalFunction(UPoly.const(1, var=var), var=var)
        self.name = f"QQ({var})"

    def __call__(self, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, UPoly):
            return RationalFunction(x, var=self.var)
        return RationalFunction(UPoly.const(Fraction(x), var=self.var), var=self.var)

    def gen(self) -> RationalFunction:
        return RationalFunction(UPoly.x(QQ, self.var), var=self.var)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self):
        return hash(("QQ(", self.var))

    def __repr__(self):
        return f"RationalFunctionField({self.var!r})"
