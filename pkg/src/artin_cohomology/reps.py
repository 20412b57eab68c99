"""Braid representations behind the Shapiro-lemma identification.

Two families of matrices represent ``Br_{n+1} = G_{A_n}`` on an
(n+1)-dimensional free module:

* the Tong-Yang-Ma matrices over ``Q[u^+-1]``, identity except a
  ``[[0, 1], [u, 0]]`` block;
* the representation induced from the rank-one local system of
  ``G_{B_n}``, over ``Q[q^+-1, t^+-1]``.

Matrices act on column vectors and a word ``g_1 g_2 ... g_k`` maps to the
product ``rho(g_1) rho(g_2) ... rho(g_k)``.  Relation checks compare both
sides of each relation exactly, so they do not depend on that choice.

>>> print(tym_matrices(2)[0].matrix.rows[1][0])
u
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .coxeter import INF, CoxeterDiagram, affine_a, type_a, type_b
from .poly import BiLaurent
from .rings import Matrix, TwoVariableLaurentRing, determinant, diagonal_matrix, matmul, scalar_matrix

TYM_NAMES = ("u", "v")
QT_NAMES = ("q", "t")
TYM_RING = TwoVariableLaurentRing(TYM_NAMES)
QT_RING = TwoVariableLaurentRing(QT_NAMES)


@dataclass(frozen=True)
class RepMatrix:
    """Image of one generator; ``label`` names the generator (``s1``, ``s2``, ...)."""

    label: str
    matrix: Matrix
    ring: TwoVariableLaurentRing

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def determinant(self) -> BiLaurent:
        return determinant(self.matrix, self.ring)

    def __str__(self):
        return self.label + " = [" + "; ".join(", ".join(str(x) for x in r) for r in self.matrix.rows) + "]"


def _block_matrix(n: int, i: int, diag, block, ring) -> Matrix:
    """(n+1)x(n+1) matrix: ``diag`` on the diagonal, ``block`` at rows/columns i, i+1 (1-based)."""
    rows = [[ring.zero] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        rows[k][k] = ring(diag)
    a, b = i - 1, i
    (rows[a][a], rows[a][b]), (rows[b][a], rows[b][b]) = [[ring(x) for x in r] for r in block]
    return Matrix.from_rows(rows, n + 1)


def tym_matrices(n: int) -> list[RepMatrix]:
    """Tong-Yang-Ma images of ``sigma_1 .. sigma_n`` over ``Q[u^+-1]``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    u = BiLaurent.monomial(1, 0, names=TYM_NAMES)
    block = ((0, 1), (u, 0))
    return [RepMatrix(f"s{i}", _block_matrix(n, i, 1, block, TYM_RING), TYM_RING) for i in range(1, n + 1)]


def induced_matrices(n: int) -> list[RepMatrix]:
    """Images of ``sigma_1 .. sigma_n`` in the representation induced from ``G_{B_n}``.

    The coset representatives are conjugates of ``sigma_n`` together with
    the identity, so ``sigma_n`` itself acts through ``[[0, 1], [-t, 0]]``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    q, t = BiLaurent.q(), BiLaurent.t()
    out = []
    for i in range(1, n):
        block = ((0, -q), (q.inverse() * t, 0))
        out.append(RepMatrix(f"s{i}", _block_matrix(n, i, -q, block, QT_RING), QT_RING))
    out.append(RepMatrix(f"s{n}", _block_matrix(n, n, -q, ((0, 1), (-t, 0)), QT_RING), QT_RING))
    return out


def monomial_inverse(m: Matrix) -> Matrix:
    """Inverse of a matrix with exactly one unit (monomial) entry per row and column."""
    n = m.nrows
    rows = [[None] * n for _ in range(n)]
    for i, r in enumerate(m.rows):
        nz = [(j, x) for j, x in enumerate(r) if x]
        if len(nz) != 1 or not nz[0][1].is_monomial:
            raise ValueError("not a monomial matrix")
        j, x = nz[0]
        rows[j][i] = x.inverse()
    zero = next(x for r in m.rows for x in r if x) * 0
    return Matrix.from_rows([[x if x is not None else zero for x in r] for r in rows], n)


def word_image(word: Sequence, images: Mapping, ring) -> Matrix:
    """Product of generator images along ``word`` (left to right)."""
    dim = next(iter(images.values())).nrows
    acc = Matrix.identity(dim, ring)
    for g in word:
        acc = matmul(acc, images[g], ring)
    return acc


def alternating_word(a, b, m: int) -> tuple:
    return tuple(a if k % 2 == 0 else b for k in range(m))


@dataclass(frozen=True)
class RelationCheck:
    name: str
    ok: bool


@dataclass(frozen=True)
class RelationReport:
    label: str
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"label": self.label, "ok": self.ok, "checks": [{"relation": c.name, "ok": c.ok} for c in self.checks]}


def _as_images(matrices, diagram: CoxeterDiagram) -> dict[int, Matrix]:
    """Generator images keyed by vertex index."""
    if isinstance(matrices, Mapping):
        matrices = [matrices[v] for v in diagram.vertices]
    matrices = list(matrices)
    if len(matrices) != diagram.rank:
        raise ValueError(f"{len(matrices)} matrices for {diagram.rank} vertices")
    images = {k: (m.matrix if isinstance(m, RepMatrix) else m) for k, m in enumerate(matrices)}
    dims = {m.shape for m in images.values()}
    if len(dims) != 1 or any(r != c for r, c in dims):
        raise ValueError(f"generator images must be square of one size, got {sorted(dims)}")
    return images


def _ring_of(images: Mapping) -> TwoVariableLaurentRing:
    entry = next(x for m in images.values() for r in m.rows for x in r if x)
    return TwoVariableLaurentRing(entry.names)


def verify_rep_relations(matrices, diagram: CoxeterDiagram, label: str = "") -> RelationReport:
    """Check every Artin relation ``prod(s,t;m) = prod(t,s;m)`` of ``diagram`` (m finite).

    ``matrices`` is a sequence in vertex order or a mapping keyed by vertex.
    """
    images = _as_images(matrices, diagram)
    ring = _ring_of(images)
    checks = []
    vs = diagram.vertices
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            m = diagram.m(a, b)
            if m == INF:
                continue
            lhs = word_image(alternating_word(a, b, m), images, ring)
            rhs = word_image(alternating_word(b, a, m), images, ring)
            checks.append(RelationCheck(f"({vs[a]} {vs[b]})^{m}", lhs == rhs))
    return RelationReport(label or "artin relations", tuple(checks))


def bn_images(braid: Sequence) -> list[Matrix]:
    """Images of ``eps_1 .. eps_{n-1}, eps-bar_n`` under ``eps_i -> sigma_i``, ``eps-bar_n -> sigma_n^2``."""
    ms = [m.matrix if isinstance(m, RepMatrix) else m for m in braid]
    ring = _ring_of(dict(enumerate(ms)))
    return ms[:-1] + [matmul(ms[-1], ms[-1], ring)]


def verify_bn_embedding(braid: Sequence, label: str = "") -> RelationReport:
    """Relations of ``G_{B_n}`` pulled back along its embedding in ``Br_{n+1}``."""
    n = len(braid)
    rep = verify_rep_relations(bn_images(braid), type_b(n))
    return RelationReport(label or f"B{n} embedding", rep.checks)


def kent_peifer_tau(braid: Sequence) -> Matrix:
    """Image of ``tau = eps-bar_n eps_{n-1} ... eps_1``."""
    ms = bn_images(braid)
    ring = _ring_of(dict(enumerate(ms)))
    word = [len(ms) - 1] + list(range(len(ms) - 2, -1, -1))
    return word_image(word, dict(enumerate(ms)), ring)


def verify_kent_peifer(braid: Sequence, label: str = "") -> RelationReport:
    """``tau^-1 eps_i tau = eps_{i+1}`` for ``1 <= i <= n-2``, then the affine relations.

    With ``eps_n := tau^-1 eps_{n-1} tau`` the elements ``eps_1 .. eps_n``
    must satisfy the relations of the cyclic diagram ``A~_{n-1}``.
    """
    ms = bn_images(braid)
    n = len(ms)
    ring = _ring_of(dict(enumerate(ms)))
    tau = kent_peifer_tau(braid)
    tau_inv = monomial_inverse(tau)

    def conj(x):
        return matmul(matmul(tau_inv, x, ring), tau, ring)

    checks = [RelationCheck(f"tau^-1 e{i} tau = e{i + 1}", conj(ms[i - 1]) == ms[i]) for i in range(1, n - 1)]
    if n >= 2:
        eps = ms[:-1] + [conj(ms[n - 2])]
        affine = verify_rep_relations(eps, affine_a(n - 1))
        checks += [RelationCheck(f"affine {c.name}", c.ok) for c in affine.checks]
        checks.append(RelationCheck(f"tau^-1 e{n} tau = e1", conj(eps[-1]) == eps[0]))
    return RelationReport(label or f"Kent-Peifer n={n}", tuple(checks))


@dataclass(frozen=True)
class Convention:
    """Conjugation by ``D = Diag(1, ..., 1, -q^exponent)``; ``inverse_left`` means ``M -> D^-1 M D``."""

    exponent: int
    inverse_left: bool

    def canonical(self) -> "Convention":
        """The same map written with ``inverse_left=True``."""
        return self if self.inverse_left else Convention(-self.exponent, True)

    def __str__(self):
        d = f"Diag(1,...,1,-q^{self.exponent})"
        return f"M -> D^-1 M D, D = {d}" if self.inverse_left else f"M -> D M D^-1, D = {d}"


CONVENTIONS = tuple(Convention(e, left) for e in (1, -1) for left in (True, False))


@dataclass(frozen=True)
class EquivalenceReport:
    n: int
    results: tuple[tuple[Convention, bool], ...]

    @property
    def label(self) -> str:
        return f"equivalence n={self.n}"

    @property
    def successes(self) -> list[Convention]:
        return [c for c, ok in self.results if ok]

    @property
    def maps(self) -> list[Convention]:
        """Distinct successful conjugation maps (two spellings of one map count once)."""
        return sorted({c.canonical() for c in self.successes}, key=lambda c: c.exponent)

    @property
    def ok(self) -> bool:
        return len(self.maps) == 1

    @property
    def convention(self) -> Convention | None:
        return self.maps[0] if self.ok else None

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "ok": self.ok,
            "convention": str(self.convention) if self.convention else None,
            "tried": [{"convention": str(c), "ok": ok} for c, ok in self.results],
        }


def twisted_tym(n: int) -> list[Matrix]:
    """``(-q) * rho_TYM(sigma_i)`` with ``u = -q^-2 t``."""
    q, t = BiLaurent.q(), BiLaurent.t()
    u_value = -(q**-2) * t
    minus_q = scalar_matrix(-q, n + 1, QT_RING)
    out = []
    for m in tym_matrices(n):
        sub = m.matrix.map(lambda x: x.subs({"u": u_value}))
        out.append(matmul(minus_q, sub, QT_RING))
    return out


def verify_equivalence(n: int) -> EquivalenceReport:
    """Conjugate the induced matrices by each convention and compare with :func:`twisted_tym`."""
    if n < 2:
        raise ValueError("n must be >= 2")
    q = BiLaurent.q()
    target = twisted_tym(n)
    induced = [m.matrix for m in induced_matrices(n)]
    results = []
    for conv in CONVENTIONS:
        d = diagonal_matrix([QT_RING.one] * n + [-(q**conv.exponent)], QT_RING)
        d_inv = monomial_inverse(d)
        left, right = (d_inv, d) if conv.inverse_left else (d, d_inv)
        ok = all(matmul(matmul(left, m, QT_RING), right, QT_RING) == want for m, want in zip(induced, target))
        results.append((conv, ok))
    return EquivalenceReport(n, tuple(results))


def verify_all(n: int) -> list:
    """Every representation check at rank n, as reports with ``ok`` and ``to_json``."""
    tym, ind = tym_matrices(n), induced_matrices(n)
    return [
        verify_rep_relations(tym, type_a(n), f"TYM A{n} relations"),
        verify_rep_relations(ind, type_a(n), f"induced A{n} relations"),
        verify_bn_embedding(tym, f"TYM B{n} embedding"),
        verify_bn_embedding(ind, f"induced B{n} embedding"),
        verify_kent_peifer(tym, f"TYM Kent-Peifer n={n}"),
        verify_kent_peifer(ind, f"induced Kent-Peifer n={n}"),
        verify_equivalence(n),
    ]


def determinants_are_units(matrices: Sequence[RepMatrix]) -> bool:
    return all(m.determinant().is_monomial for m in matrices)


__all__ = [
    "Convention",
    "EquivalenceReport",
    "RelationCheck",
    "RelationReport",
    "RepMatrix",
    "bn_images",
    "determinants_are_units",
    "induced_matrices",
    "kent_peifer_tau",
    "monomial_inverse",
    "tym_matrices",
    "twisted_tym",
    "verify_all",
    "verify_bn_embedding",
    "verify_equivalence",
    "verify_kent_peifer",
    "verify_rep_relations",
    "word_image",
]
