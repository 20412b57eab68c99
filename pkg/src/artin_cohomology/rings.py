"""Coefficient-ring descriptors and a small exact matrix type.

A ring descriptor knows its zero and one, how to coerce scalars, and, when
the ring is Euclidean, its norm, division with remainder and unit-normal
form.  Cochain complexes carry one of these so later stages know which
engine may be applied to their matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .poly import QQ, BiLaurent, UPoly


class UnsupportedRingError(TypeError):
    """The requested operation needs a Euclidean domain (or a field)."""


class TwoVariableLaurentRing:
    """``R = Q[q^+-1, t^+-1]``: a domain, but not a PID."""

    is_euclidean = False
    is_field = False

    def __init__(self, names=("q", "t")):
        self.names = tuple(names)
        self.zero = BiLaurent.zero(self.names)
        self.one = BiLaurent.one(self.names)
        self.name = f"QQ[{names[0]}^+-1, {names[1]}^+-1]"

    def __call__(self, x) -> BiLaurent:
        if isinstance(x, BiLaurent):
            return x
        return BiLaurent.const(x, self.names)

    def __eq__(self, other):
        return isinstance(other, TwoVariableLaurentRing) and other.names == self.names

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


R_QT = TwoVariableLaurentRing()


class LaurentRing:
    """``K[x^+-1]`` over an exact field ``K``; Euclidean with norm = span."""

    is_euclidean = True
    is_field = False

    def __init__(self, field=QQ, var: str = "t"):
        self.field = field
        self.var = var
        self.zero = UPoly([], field, 0, var)
        self.one = UPoly([field.one], field, 0, var)
        self.name = f"{getattr(field, 'name', field)}[{var}^+-1]"

    def __call__(self, x) -> UPoly:
        if isinstance(x, UPoly):
            return x
        return UPoly([x], self.field, 0, self.var)

    def gen(self) -> UPoly:
        return UPoly.x(self.field, self.var)

    def norm(self, a: UPoly) -> int:
        return a.span

    def is_unit(self, a: UPoly) -> bool:
        return a.is_monomial

    def unit_inverse(self, u: UPoly) -> UPoly:
        return u.inverse()

    def divmod(self, a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
        if not a:
            return self.zero, self.zero
        a0, b0 = a.shift(-a.val), b.shift(-b.val)
        qt, r = divmod(a0, b0)
        return qt.shift(a.val - b.val), r.shift(a.val)

    def normal_unit(self, a: UPoly) -> UPoly:
        """The unit ``u`` with ``u * a`` in normal form."""
        if not a:
            return self.one
        return UPoly.monomial(self.field.one / a.lc, -a.val, self.field, self.var)

    def normal(self, a: UPoly) -> UPoly:
        return a.unit_normal()

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.field == self.field and other.var == self.var

    def __hash__(self):
        return hash(("L", self.field, self.var))

    def __repr__(self):
        return self.name


class PolynomialRing(LaurentRing):
    """``K[x]``; Euclidean with norm = degree."""

    def __init__(self, field=QQ, var: str = "x"):
        super().__init__(field, var)
        self.name = f"{getattr(field, 'name', field)}[{var}]"

    def __call__(self, x) -> UPoly:
        p = super().__call__(x)
        if not p.is_polynomial:
            raise ValueError(f"{p} is not a polynomial")
        return p

    def norm(self, a: UPoly) -> int:
        return a.degree

    def is_unit(self, a: UPoly) -> bool:
        return a.degree == 0

    def divmod(self, a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
        return divmod(a, b)

    def normal_unit(self, a: UPoly) -> UPoly:
        if not a:
            return self.one
        return UPoly([self.field.one / a.lc], self.field, 0, self.var)

    def normal(self, a: UPoly) -> UPoly:
        return a.monic()

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.field == self.field and other.var == self.var

    def __hash__(self):
        return hash(("P", self.field, self.var))


class FieldRing:
    """A field used as a (trivially Euclidean) coefficient ring."""

    is_euclidean = True
    is_field = True

    def __init__(self, field=QQ):
        self.field = field
        self.zero = field.zero
        self.one = field.one
        self.name = getattr(field, "name", repr(field))

    def __call__(self, x):
        return self.field(x)

    def norm(self, a) -> int:
        return 0

    def is_unit(self, a) -> bool:
        return bool(a)

    def unit_inverse(self, u):
        return self.one / u

    def divmod(self, a, b):
        return a / b, self.zero

    def normal_unit(self, a):
        return self.one / a if a else self.one

    def normal(self, a):
        return self.one if a else self.zero

    def __eq__(self, other):
        return isinstance(other, FieldRing) and other.field == self.field

    def __hash__(self):
        return hash(("F", self.field))

    def __repr__(self):
        return self.name


class FractionFieldRing:
    """Fraction field of a Euclidean ring, with elements kept in the base ring.

    Matrices over the base ring have the same rank over its fraction field,
    so rank questions are answered by running the Euclidean engine on the
    base.  Used for ``Q(q, t)`` as the fraction field of ``Q(q)[t^+-1]``.
    """

    is_euclidean = False
    is_field = True

    def __init__(self, base: LaurentRing, name: str):
        self.base = base
        self.zero = base.zero
        self.one = base.one
        self.name = name

    def __call__(self, x):
        return self.base(x)

    def __eq__(self, other):
        return isinstance(other, FractionFieldRing) and other.base == self.base

    def __hash__(self):
        return hash(("Frac", self.base))

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; ``ncols`` is stored so empty shapes survive."""

    rows: tuple[tuple, ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(rows, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ring) -> "Matrix":
        return cls(tuple((ring.zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int, ring) -> "Matrix":
        return cls(
            tuple(tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n)), n
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map(self, f: Callable) -> "Matrix":
        return Matrix(tuple(tuple(f(x) for x in r) for r in self.rows), self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]


def matmul(a: Matrix, b: Matrix, ring) -> Matrix:
    """Exact product, skipping zero entries (the coboundaries are sparse)."""
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = []
    b_rows = b.rows
    for row in a.rows:
        acc = [ring.zero] * b.ncols
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b_rows[k]):
                if y:
                    acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return Matrix(tuple(out), b.ncols)


def scalar_matrix(c, n: int, ring) -> Matrix:
    return Matrix(tuple(tuple(c if i == j else ring.zero for j in range(n)) for i in range(n)), n)


def diagonal_matrix(entries: Sequence, ring) -> Matrix:
    n = len(entries)
    return Matrix(tuple(tuple(entries[i] if i == j else ring.zero for j in range(n)) for i in range(n)), n)


def determinant(m: Matrix, ring) -> object:
    """Fraction-free (Bareiss) determinant over an exact domain.

    Needs ``ring.divmod`` for the exact divisions, or BiLaurent ``exact_div``.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ring.one
    a = m.to_lists()

    def exact(x, y):
        if isinstance(x, BiLaurent):
            return x.exact_div(y)
        qt, r = ring.divmod(x, y)
        if r:
            raise ArithmeticError("Bareiss division was not exact")
        return qt

    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d
