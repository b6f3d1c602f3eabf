"""Standard sources of matroids: graphs, uniform parameters, GF(2) columns."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import bits
from .errors import BadParameters, BudgetExceeded, EmptyMatrix, InvalidGround, NoEdges
from .matroid import GroundSet, PreMatroid


@dataclass(frozen=True)
class Edge:
    id: str
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Graph:
    """Multigraph on vertices ``0 .. vertices-1``; loops and parallel edges allowed."""

    vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise InvalidGround("edge ids must be distinct")
        for e in self.edges:
            if not (0 <= e.u < self.vertices and 0 <= e.v < self.vertices):
                raise InvalidGround(f"edge {e.id} has an endpoint outside 0..{self.vertices - 1}")

    @classmethod
    def from_pairs(cls, vertices: int, pairs: Sequence[tuple[int, int]], ids: Sequence[str] | None = None) -> Graph:
        if ids is None:
            ids = [str(i) for i in range(1, len(pairs) + 1)]
        return cls(vertices, tuple(Edge(str(i), u, v) for i, (u, v) in zip(ids, pairs)))

    def components(self) -> int:
        uf = UnionFind(self.vertices)
        for e in self.edges:
            uf.union(e.u, e.v)
        return uf.count

    def is_connected(self) -> bool:
        return self.components() == 1

    def delete(self, index: int) -> Graph:
        return Graph(self.vertices, self.edges[:index] + self.edges[index + 1:])

    def contract(self, index: int) -> Graph:
        """Merge the endpoints of edge ``index`` (which must not be a loop) and drop it."""
        keep, gone = sorted((self.edges[index].u, self.edges[index].v))

        def relabel(w: int) -> int:
            if w == gone:
                w = keep
            return w - 1 if w > gone else w

        rest = self.edges[:index] + self.edges[index + 1:]
        return Graph(self.vertices - 1, tuple(Edge(e.id, relabel(e.u), relabel(e.v)) for e in rest))

    def is_bridge(self, index: int) -> bool:
        e = self.edges[index]
        if e.is_loop:
            return False
        return self.delete(index).components() > self.components()


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        self.count -= 1
        return True


def _forests(g: Graph, rank: int) -> list[int]:
    """Edge masks of all spanning forests with ``rank`` edges.

    Include/exclude recursion per edge; the union-find state is rebuilt from
    the chosen edges at each include decision, which is cheap at desk scale.
    """
    m = len(g.edges)
    out: list[int] = []
    limit = bits.budget()
    visited = 0

    def acyclic_with(chosen: int, idx: int) -> bool:
        uf = UnionFind(g.vertices)
        for i in bits.elements(chosen):
            uf.union(g.edges[i].u, g.edges[i].v)
        e = g.edges[idx]
        return uf.find(e.u) != uf.find(e.v)

    def rec(idx: int, chosen: int, size: int) -> None:
        nonlocal visited
        visited += 1
        if visited > limit:
            raise BudgetExceeded(f"spanning forest enumeration exceeded {limit} steps")
        if size == rank:
            out.append(chosen)
            return
        if m - idx < rank - size:
            return
        if acyclic_with(chosen, idx):
            rec(idx + 1, chosen | (1 << idx), size + 1)
        rec(idx + 1, chosen, size)

    rec(0, 0, 0)
    return out


def graphic_matroid(g: Graph) -> PreMatroid:
    """Bases are the edge sets of maximal spanning forests of ``g``."""
    if not g.edges:
        raise NoEdges("graph has no edges")
    ground = GroundSet(tuple(e.id for e in g.edges))
    rank = g.vertices - g.components()
    return PreMatroid(ground, tuple(_forests(g, rank)))


def uniform_matroid(k: int, n: int) -> PreMatroid:
    if not 0 <= k <= n <= 64 or n < 1:
        raise BadParameters(f"need 0 <= k <= n <= 64 and n >= 1, got k={k}, n={n}")
    ground = GroundSet.range(n)
    return PreMatroid(ground, tuple(sum(1 << i for i in c) for c in combinations(range(n), k)))


def gf2_rank(vectors: Sequence[int]) -> int:
    """Rank over GF(2) of integer-encoded vectors (XOR basis elimination)."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def gf2_linear_matroid(columns: Sequence[Sequence[int]]) -> PreMatroid:
    """Column matroid of a 0/1 matrix given column by column."""
    if not columns:
        raise EmptyMatrix("matrix has no columns")
    height = len(columns[0])
    if any(len(c) != height for c in columns):
        raise BadParameters("columns must have equal height")
    vecs = [sum((int(bit) & 1) << r for r, bit in enumerate(col)) for col in columns]
    n = len(vecs)
    r = gf2_rank(vecs)
    ground = GroundSet.range(n)
    bases = [
        sum(1 << i for i in c)
        for c in combinations(range(n), r)
        if gf2_rank([vecs[i] for i in c]) == r
    ]
    return PreMatroid(ground, tuple(bases))
