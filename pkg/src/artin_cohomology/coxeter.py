"""Coxeter diagrams, finite-type recognition and weighted Poincare polynomials.

Diagrams carry a weight symbol (``"q"`` or ``"t"``) per vertex.  The
weighted Poincare polynomial of a finite Coxeter group is
``sum_w q^(#q-letters) t^(#t-letters)`` over reduced words; for the built-in
families it is given in closed form by :func:`parabolic_poincare` and checked
by brute force with :func:`group_poincare_oracle`.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .poly import BiLaurent, q_factorial, qt_double_factorial

INF = math.inf


class BudgetError(RuntimeError):
    """A brute-force enumeration exceeded its element cap."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed during enumeration."""


@dataclass(frozen=True)
class CoxeterDiagram:
    """Labeled Coxeter graph.

    ``edges`` maps index pairs ``(i, j)`` with ``i < j`` to labels ``m >= 3``
    (or ``INF``); absent pairs have ``m = 2``.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int, float], ...]
    weights: tuple[str, ...]

    def __post_init__(self):
        n = len(self.vertices)
        if len(self.weights) != n:
            raise ValueError("one weight symbol per vertex")
        if any(w not in ("q", "t") for w in self.weights):
            raise ValueError("weights must be 'q' or 't'")
        seen = set()
        for i, j, m in self.edges:
            if not (0 <= i < j < n):
                raise ValueError(f"bad edge ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            if not (m == INF or (int(m) == m and m >= 3)):
                raise ValueError(f"edge label must be an integer >= 3 or inf, got {m}")
            seen.add((i, j))

    @classmethod
    def build(cls, vertices: Sequence[str], labels: dict[tuple[int, int], float], weights=None):
        edges = []
        for (i, j), m in labels.items():
            if m == 2:
                continue
            i, j = min(i, j), max(i, j)
            edges.append((i, j, m))
        edges.sort()
        if weights is None:
            weights = ("q",) * len(vertices)
        return cls(tuple(vertices), tuple(edges), tuple(weights))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def m(self, i: int, j: int) -> float:
        if i == j:
            return 1
        a, b = min(i, j), max(i, j)
        for x, y, m in self.edges:
            if (x, y) == (a, b):
                return m
        return 2

    def coxeter_matrix(self) -> list[list[float]]:
        return [[self.m(i, j) for j in range(self.rank)] for i in range(self.rank)]

    def subdiagram(self, subset: Iterable[int]) -> "CoxeterDiagram":
        idx = sorted(subset)
        pos = {v: k for k, v in enumerate(idx)}
        edges = tuple((pos[i], pos[j], m) for i, j, m in self.edges if i in pos and j in pos)
        return CoxeterDiagram(tuple(self.vertices[i] for i in idx), edges, tuple(self.weights[i] for i in idx))

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.rank))
        for i, j, m in self.edges:
            g.add_edge(i, j, m=m)
        return g

    def components(self) -> list[tuple[int, ...]]:
        """Vertex index tuples of the connected components, in order of first vertex."""
        return sorted(tuple(sorted(c)) for c in nx.connected_components(self.graph()))

    # -- JSON -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"a": i, "b": j, "m": "inf" if m == INF else int(m)} for i, j, m in self.edges],
            "weights": {v: w for v, w in zip(self.vertices, self.weights)},
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "CoxeterDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        vertices = list(data["vertices"])
        labels = {}
        for e in data.get("edges", []):
            m = e["m"]
            labels[(int(e["a"]), int(e["b"]))] = INF if m in ("inf", "infinity") else int(m)
        w = data.get("weights", {})
        weights = [w.get(v, "q") for v in vertices]
        return cls.build(vertices, labels, weights)


# -- built-in families ------------------------------------------------------


def type_a(n: int) -> CoxeterDiagram:
    """``A_n``: path on n vertices, all weights q."""
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    return CoxeterDiagram.build([f"s{i}" for i in range(1, n + 1)], {(i, i + 1): 3 for i in range(n - 1)})


def type_b(n: int) -> CoxeterDiagram:
    """``B_n``: path with ``m(s_{n-1}, s_n) = 4``; the last vertex has weight t."""
    if n < 1:
        raise ValueError("B_n needs n >= 1")
    labels = {(i, i + 1): 3 for i in range(n - 2)}
    if n >= 2:
        labels[(n - 2, n - 1)] = 4
    weights = ["q"] * (n - 1) + ["t"]
    return CoxeterDiagram.build([f"s{i}" for i in range(1, n + 1)], labels, weights)


def affine_a(n: int) -> CoxeterDiagram:
    """``A~_n`` on n+1 vertices: a cycle with all labels 3 (``A~_1`` has one inf edge)."""
    if n < 1:
        raise ValueError("A~_n needs n >= 1")
    names = [f"s{i}" for i in range(1, n + 2)]
    if n == 1:
        return CoxeterDiagram.build(names, {(0, 1): INF})
    labels = {(i, i + 1): 3 for i in range(n)}
    labels[(0, n)] = 3
    return CoxeterDiagram.build(names, labels)


def affine_c(n: int) -> CoxeterDiagram:
    """``C~_n`` on n+1 vertices: a path with labels 4 at both ends."""
    if n < 1:
        raise ValueError("C~_n needs n >= 1")
    names = [f"s{i}" for i in range(n + 1)]
    if n == 1:
        return CoxeterDiagram.build(names, {(0, 1): INF})
    labels = {(i, i + 1): 3 for i in range(1, n - 1)}
    labels[(0, 1)] = 4
    labels[(n - 1, n)] = 4
    return CoxeterDiagram.build(names, labels)


FAMILIES = {"A": type_a, "B": type_b, "Atilde": affine_a, "Ctilde": affine_c}


def diagram_from_shorthand(text: str) -> CoxeterDiagram:
    """Parse ``"A:n"``, ``"B:n"``, ``"Atilde:n"`` or ``"Ctilde:n"``."""
    try:
        fam, n = text.split(":")
        return FAMILIES[fam](int(n))
    except (KeyError, ValueError) as exc:
        raise ValueError(f"unknown diagram shorthand {text!r}") from exc


# -- finite-type recognition ------------------------------------------------


def _path(k: int, labels: dict[int, float] | None = None) -> nx.Graph:
    g = nx.path_graph(k)
    for i in range(k - 1):
        g.edges[i, i + 1]["m"] = 3
    for i, m in (labels or {}).items():
        g.edges[i, i + 1]["m"] = m
    return g


def _branched(arms: tuple[int, int, int]) -> nx.Graph:
    """Tree with one trivalent vertex and arms of the given lengths."""
    g = nx.Graph()
    g.add_node(0)
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            g.add_edge(prev, nxt, m=3)
            prev = nxt
            nxt += 1
    return g


def _catalog(k: int) -> list[tuple[str, nx.Graph]]:
    """Connected finite-type diagrams on k >= 3 vertices."""
    out = [(f"A{k}", _path(k)), (f"B{k}", _path(k, {k - 2: 4}))]
    if k >= 4:
        out.append((f"D{k}", _branched((1, 1, k - 3))))
    if k in (6, 7, 8):
        out.append((f"E{k}", _branched((1, 2, k - 4))))
    if k == 4:
        out.append(("F4", _path(4, {1: 4})))
        out.append(("H4", _path(4, {0: 5})))
    if k == 3:
        out.append(("H3", _path(3, {0: 5})))
    return out


def _component_type(d: CoxeterDiagram) -> str | None:
    k = d.rank
    if k == 1:
        return "A1"
    if any(m == INF for _, _, m in d.edges):
        return None
    if k == 2:
        m = int(d.edges[0][2])
        return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
    g = d.graph()
    if not nx.is_tree(g):
        return None
    for name, model in _catalog(k):
        if nx.is_isomorphic(g, model, edge_match=lambda a, b: a["m"] == b["m"]):
            return name
    return None


def finite_type_components(diagram: CoxeterDiagram) -> list[tuple[tuple[int, ...], str | None]]:
    """Each connected component with its finite type name (``None`` if infinite)."""
    return [(c, _component_type(diagram.subdiagram(c))) for c in diagram.components()]


def is_finite_type(diagram: CoxeterDiagram) -> bool:
    """True iff every connected component is a finite-type Coxeter diagram.

    >>> is_finite_type(type_a(3)), is_finite_type(affine_a(2))
    (True, False)
    """
    return all(name is not None for _, name in finite_type_components(diagram))


# -- weighted Poincare polynomials ------------------------------------------


def path_components(gamma: Iterable[int]) -> list[tuple[int, ...]]:
    """Maximal runs of consecutive integers in ``gamma``."""
    runs: list[list[int]] = []
    for g in sorted(gamma):
        if runs and runs[-1][-1] == g - 1:
            runs[-1].append(g)
        else:
            runs.append([g])
    return [tuple(r) for r in runs]


def parabolic_poincare(family: str, n: int, gamma: Iterable[int]) -> BiLaurent:
    """Weighted Poincare polynomial of the parabolic subgroup on ``gamma``.

    ``gamma`` is a subset of ``{1..n}``.  A component of size m avoiding node
    n (any component for type A) contributes ``[m+1]_q!``; for type B the
    component through node n contributes ``[2m]_{q,t}!!``.
    """
    gamma = tuple(sorted(set(gamma)))
    if family not in ("A", "B"):
        raise ValueError(f"family must be 'A' or 'B', got {family!r}")
    if gamma and not (1 <= gamma[0] and gamma[-1] <= n):
        raise ValueError(f"{gamma} is not a subset of 1..{n}")
    out = BiLaurent.one()
    for comp in path_components(gamma):
        if family == "B" and comp[-1] == n:
            out = out * qt_double_factorial(len(comp))
        else:
            out = out * q_factorial(len(comp) + 1)
    return out


def _model_generators(kind: str, k: int):
    """Right multiplication by the simple reflections of the concrete model.

    Type A: permutations of ``range(k+1)``, ``s_i`` swaps positions i-1, i.
    Type B: signed permutations of ``1..k``, ``s_i`` (i < k) swaps positions
    i-1, i and ``s_k`` negates the last position.
    """
    gens = []
    for i in range(1, k + 1):
        if kind == "B" and i == k:

            def flip(w):
                return w[:-1] + (-w[-1],)

            gens.append(flip)
        else:

            def swap(w, i=i):
                return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]

            gens.append(swap)
    identity = tuple(range(k + 1)) if kind == "A" else tuple(range(1, k + 1))
    return identity, gens


def _model_diagram(kind: str, k: int) -> nx.Graph:
    return _path(k, {k - 2: 4} if kind == "B" and k >= 2 else None)


def enumerate_weighted(kind: str, k: int, t_gens: set[int], cap: int) -> dict[tuple, tuple[int, int]]:
    """BFS over the Cayley graph; maps each element to ``(length, #t-letters)``.

    ``t_gens`` holds the 1-based model generators carrying weight t.  The t-count
    is checked to agree along every geodesic reaching an element.
    """
    identity, gens = _model_generators(kind, k)
    info = {identity: (0, 0)}
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        length, nt = info[w]
        for i, g in enumerate(gens, start=1):
            v = g(w)
            cand = (length + 1, nt + (i in t_gens))
            seen = info.get(v)
            if seen is None:
                if len(info) >= cap:
                    raise BudgetError(f"group order exceeds cap {cap}")
                info[v] = cand
                queue.append(v)
            elif seen[0] == cand[0] and seen[1] != cand[1]:
                raise InvariantViolation(f"t-letter count of {v} depends on the reduced word")
    return info


def group_poincare_oracle(diagram: CoxeterDiagram, cap: int = 10_000) -> BiLaurent:
    """Brute-force ``sum_w q^(l(w)-n(w)) t^(n(w))`` by Cayley-graph BFS.

    Every component must be of type A or B.  ``cap`` bounds the total number
    of group elements.
    """
    total = BiLaurent.one()
    order = 1
    for comp, name in finite_type_components(diagram):
        if name is None or name[0] not in "AB":
            raise ValueError(f"no concrete model for component type {name}")
        kind, k = name[0], int(name[1:])
        sub = diagram.subdiagram(comp)
        # map diagram vertices onto model generators
        matcher = GraphMatcher(sub.graph(), _model_diagram(kind, k), edge_match=lambda a, b: a["m"] == b["m"])
        iso = next(matcher.isomorphisms_iter())
        t_gens = {iso[v] + 1 for v in range(sub.rank) if sub.weights[v] == "t"}
        info = enumerate_weighted(kind, k, t_gens, max(1, cap // order))
        order *= len(info)
        if order > cap:
            raise BudgetError(f"group order {order} exceeds cap {cap}")
        poly: dict[tuple[int, int], int] = {}
        for length, nt in info.values():
            e = (length - nt, nt)
            poly[e] = poly.get(e, 0) + 1
        total = total * BiLaurent(poly)
    return total


def all_subsets(n: int) -> list[tuple[int, ...]]:
    return [c for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
