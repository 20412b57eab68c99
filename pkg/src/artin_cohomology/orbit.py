"""Finite parabolic subsets, the cell count of the orbit-space model, and Artin presentations.

``K_W^fin`` is the set of vertex subsets ``J`` whose parabolic subgroup
``W_J`` is finite.  The CW model of the orbit space has one ``|J|``-cell for
each of them, the empty set giving the base point.

>>> from .coxeter import affine_a
>>> finite_parabolic_subsets(affine_a(2)).f_vector
(1, 3, 3)
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coxeter import INF, CoxeterDiagram, is_finite_type


@dataclass(frozen=True)
class FiniteSubsetComplex:
    """Vertex-index subsets spanning finite parabolics, by size then lexicographically."""

    rank: int
    subsets: tuple[tuple[int, ...], ...]

    @property
    def f_vector(self) -> tuple[int, ...]:
        top = max(len(j) for j in self.subsets)
        counts = [0] * (top + 1)
        for j in self.subsets:
            counts[len(j)] += 1
        return tuple(counts)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector))

    def __contains__(self, subset) -> bool:
        return tuple(sorted(subset)) in set(self.subsets)

    def is_downward_closed(self) -> bool:
        members = set(self.subsets)
        return all(j[:k] + j[k + 1 :] in members for j in self.subsets for k in range(len(j)))


def finite_parabolic_subsets(diagram: CoxeterDiagram) -> FiniteSubsetComplex:
    """Enumerate ``K_W^fin`` level by level.

    A set of size k+1 is tested only when all of its k-element subsets are
    already known to be finite type.
    """
    n = diagram.rank
    level = [()]
    found = [()]
    while level:
        known = set(level)
        nxt = []
        for j in level:
            start = j[-1] + 1 if j else 0
            for v in range(start, n):
                cand = j + (v,)
                if any(cand[:k] + cand[k + 1 :] not in known for k in range(len(cand) - 1)):
                    continue
                if is_finite_type(diagram.subdiagram(cand)):
                    nxt.append(cand)
        found.extend(nxt)
        level = nxt
    return FiniteSubsetComplex(n, tuple(found))


def euler_characteristic(diagram: CoxeterDiagram) -> int:
    """``sum (-1)^|J|`` over ``K_W^fin``, the empty set included.

    >>> from .coxeter import affine_a, type_b
    >>> euler_characteristic(affine_a(3)), euler_characteristic(type_b(3))
    (-1, 0)
    """
    return finite_parabolic_subsets(diagram).euler_characteristic


@dataclass(frozen=True)
class Presentation:
    """Generators and relations ``lhs = rhs`` (words are tuples of generator names)."""

    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [{"lhs": list(a), "rhs": list(b)} for a, b in self.relations],
        }

    @classmethod
    def from_json(cls, data) -> "Presentation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            tuple(data["generators"]),
            tuple((tuple(r["lhs"]), tuple(r["rhs"])) for r in data["relations"]),
        )

    def __str__(self):
        lines = ["< " + ", ".join(self.generators) + " |"]
        lines += ["  " + " ".join(a) + " = " + " ".join(b) for a, b in self.relations]
        lines.append(">")
        return "\n".join(lines)


def artin_presentation(diagram: CoxeterDiagram) -> Presentation:
    """Standard presentation: ``stst... = tsts...`` (m letters each side) for every finite m.

    >>> from .coxeter import type_b
    >>> print(artin_presentation(type_b(2)))
    < s1, s2 |
      s1 s2 s1 s2 = s2 s1 s2 s1
    >
    """
    names = diagram.vertices
    rels = []
    for a in range(diagram.rank):
        for b in range(a + 1, diagram.rank):
            m = diagram.m(a, b)
            if m == INF:
                continue
            m = int(m)
            lhs = tuple(names[a] if k % 2 == 0 else names[b] for k in range(m))
            rhs = tuple(names[b] if k % 2 == 0 else names[a] for k in range(m))
            rels.append((lhs, rhs))
    return Presentation(tuple(names), tuple(rels))
