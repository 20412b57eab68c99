"""Smith normal form over Euclidean domains and cohomology of free cochain complexes.

Supported rings are the descriptors of :mod:`artin_cohomology.rings`:
fields, ``K[x]`` and ``K[x^+-1]`` for ``K`` one of ``Q``, ``Q[q]/Phi_d`` or
``Q(q)``.  Over a Laurent ring the Euclidean norm is the span
``deg - val``, so powers of ``x`` are units and never appear in invariant
factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .poly import QQ, BiLaurent
from .rings import FractionFieldRing, Matrix, UnsupportedRingError, matmul


@dataclass(frozen=True)
class SNFResult:
    """``U * A * V == D`` with ``D`` diagonal in divisibility-chain, unit-normal form."""

    ring: object
    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list:
        k = min(self.D.shape)
        return [self.D[i, i] for i in range(k)]

    @property
    def invariant_factors(self) -> list:
        """Nonzero diagonal entries."""
        return [d for d in self.diagonal if d]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _check_ring(ring):
    if not getattr(ring, "is_euclidean", False):
        raise UnsupportedRingError(f"Smith normal form needs a Euclidean ring, got {ring!r}")


def smith_normal_form(a: Matrix, ring, verify: bool = True) -> SNFResult:
    """Diagonalize ``a`` by invertible row and column operations.

    Pivots are chosen with minimal Euclidean norm.  With ``verify`` the
    identity ``U a V = D`` is re-checked by exact multiplication.
    """
    _check_ring(ring)
    m, n = a.shape
    A = a.to_lists()
    U = Matrix.identity(m, ring).to_lists()
    V = Matrix.identity(n, ring).to_lists()
    zero = ring.zero

    def add_row(dst, src, c):  # row_dst += c * row_src
        if not c:
            return
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):  # col_dst += c * col_src
        if not c:
            return
        for row in A:
            row[dst] = row[dst] + c * row[src]
        for row in V:
            row[dst] = row[dst] + c * row[src]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x:
                    nx = ring.norm(x)
                    if best is None or nx < best[0]:
                        best = (nx, i, j)
                        if nx == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    qt, r = ring.divmod(A[i][t], A[t][t])
                    add_row(i, t, -qt)
                    if r:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    qt, r = ring.divmod(A[t][j], A[t][t])
                    add_col(j, t, -qt)
                    if r:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] and ring.divmod(A[i][j], A[t][t])[1]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, ring.one)
        # normalize the pivot by a unit
        u = ring.normal_unit(A[t][t])
        A[t] = [u * x for x in A[t]]
        U[t] = [u * x for x in U[t]]

    D = Matrix.from_rows(A, n)
    res = SNFResult(ring, D, Matrix.from_rows(U, m), Matrix.from_rows(V, n))
    if verify:
        if matmul(matmul(res.U, a, ring), res.V, ring) != D:
            raise ArithmeticError("Smith normal form failed U*A*V == D")
        check_snf_shape(res)
    return res


def check_snf_shape(res: SNFResult) -> None:
    """Raise unless D is diagonal, unit-normal, and satisfies the divisibility chain."""
    ring, D = res.ring, res.D
    for i, row in enumerate(D.rows):
        for j, x in enumerate(row):
            if i != j and x:
                raise ArithmeticError("D is not diagonal")
    diag = res.diagonal
    seen_zero = False
    for k, d in enumerate(diag):
        if not d:
            seen_zero = True
            continue
        if seen_zero:
            raise ArithmeticError("zero diagonal entries must come last")
        if ring.normal(d) != d:
            raise ArithmeticError(f"diagonal entry {d} is not unit-normal")
        if k + 1 < len(diag) and diag[k + 1] and ring.divmod(diag[k + 1], d)[1]:
            raise ArithmeticError("divisibility chain broken")


def matrix_rank(a: Matrix, ring) -> int:
    if a.nrows == 0 or a.ncols == 0:
        return 0
    if isinstance(ring, FractionFieldRing):
        ring = ring.base
    return smith_normal_form(a, ring, verify=False).rank


@dataclass(frozen=True)
class CohomologyGroup:
    """``free_rank`` copies of the ring plus ``R/(f)`` for each torsion factor."""

    free_rank: int
    torsion: tuple = ()

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("R" if self.free_rank == 1 else f"R^{self.free_rank}")
        parts.extend(f"R/({f})" for f in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CohomologyModule:
    """Cohomology of a complex, degree by degree."""

    ring: object
    groups: dict = field(default_factory=dict)

    def __getitem__(self, degree: int) -> CohomologyGroup:
        return self.groups.get(degree, CohomologyGroup(0))

    @property
    def degrees(self) -> list[int]:
        return sorted(self.groups)

    def nonzero_degrees(self) -> list[int]:
        return [k for k in self.degrees if not self.groups[k].is_zero]

    def to_json(self) -> list[dict]:
        return [
            {"degree": k, "free_rank": g.free_rank, "torsion": [str(f) for f in g.torsion]}
            for k, g in sorted(self.groups.items())
        ]

    @classmethod
    def from_json(cls, data, ring) -> "CohomologyModule":
        """Read :meth:`to_json` output back over a Laurent or polynomial ring with rational coefficients."""
        if isinstance(data, str):
            data = json.loads(data)
        if getattr(ring, "field", None) != QQ or not hasattr(ring, "var"):
            raise UnsupportedRingError(f"cannot parse torsion over {ring!r}")
        names = ("q", "t") if ring.var in ("q", "t") else (ring.var, "_")

        def parse(text):
            return ring.normal(BiLaurent.parse(text, names).to_upoly(ring.var, 1))

        return cls(
            ring,
            {
                row["degree"]: CohomologyGroup(row["free_rank"], tuple(parse(f) for f in row["torsion"]))
                for row in data
            },
        )

    def __str__(self):
        return "\n".join(f"H^{k} = {self.groups[k]}" for k in self.degrees)


def complex_cohomology(cx, verify: bool = True) -> CohomologyModule:
    """``H^k = ker delta^k / im delta^(k-1)`` for a free complex over a PID.

    The kernel of ``delta^k`` is a direct summand (its cokernel embeds in a
    free module), so the torsion of ``H^k`` is read off the nonunit
    invariant factors of ``delta^(k-1)``, and the free rank is
    ``rank C^k - rank delta^k - rank delta^(k-1)``.  Over a field only ranks
    are reported.
    """
    ring = cx.ring
    if not (ring.is_euclidean or isinstance(ring, FractionFieldRing)):
        raise UnsupportedRingError(f"cohomology needs a PID, got {ring!r}")
    engine = ring.base if isinstance(ring, FractionFieldRing) else ring
    for k in range(len(cx.coboundaries) - 1):
        if not matmul(cx.coboundaries[k + 1], cx.coboundaries[k], engine).is_zero():
            raise ValueError(f"not a complex: delta o delta != 0 at degree {cx.lo + k}")
    snfs = {}
    for deg in cx.degrees:
        d = cx.coboundary(deg)
        if d.nrows and d.ncols:
            snfs[deg] = smith_normal_form(d, engine, verify=verify)
    groups = {}
    for deg in cx.degrees:
        out_rank = snfs[deg].rank if deg in snfs else 0
        prev = snfs.get(deg - 1)
        in_rank = prev.rank if prev else 0
        free = cx.rank(deg) - out_rank - in_rank
        torsion = ()
        if prev is not None and not ring.is_field:
            torsion = tuple(f for f in prev.invariant_factors if not engine.is_unit(f))
        groups[deg] = CohomologyGroup(free, torsion)
    return CohomologyModule(ring, groups)
