"""The verification corpus of small matroids.

* uniform matroids U(k, n) for 0 <= k <= n <= 5;
* graphic matroids of every connected multigraph (loops and parallel edges
  allowed) with 1 to 5 edges, one per isomorphism class;
* 20 GF(2) column matroids of random 3 x 5 matrices, drawn from the seeded
  xorshift generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

import networkx as nx

from .constructors import Graph, gf2_linear_matroid, graphic_matroid, uniform_matroid
from .matroid import PreMatroid
from .rng import XorShift64Star

MAX_EDGES = 5
GF2_SEED = 20160412
GF2_COUNT = 20


@dataclass(frozen=True)
class Entry:
    name: str
    matroid: PreMatroid
    graph: Graph | None = None


def _as_nx(vertices: int, pairs) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(vertices))
    h.add_edges_from(pairs)
    return h


@lru_cache(maxsize=None)
def connected_multigraphs(max_edges: int = MAX_EDGES) -> tuple[Graph, ...]:
    """Connected multigraphs with 1..max_edges edges and no isolated vertex, up to isomorphism."""
    found: list[tuple[int, tuple[tuple[int, int], ...], nx.MultiGraph]] = []
    for v in range(1, max_edges + 2):
        slots = [(i, j) for i in range(v) for j in range(i, v)]
        for m in range(max(1, v - 1), max_edges + 1):
            buckets: dict[tuple, list[nx.MultiGraph]] = {}
            for pairs in combinations_with_replacement(slots, m):
                touched = {w for p in pairs for w in p}
                if len(touched) != v:
                    continue
                h = _as_nx(v, pairs)
                if not nx.is_connected(h):
                    continue
                loops = tuple(sorted(sum(1 for p in pairs if p == (w, w)) for w in range(v)))
                key = (tuple(sorted(d for _, d in h.degree())), loops)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                found.append((v, pairs, h))
    return tuple(Graph.from_pairs(v, list(pairs)) for v, pairs, _ in found)


def _gf2_matrices(count: int = GF2_COUNT, seed: int = GF2_SEED) -> list[list[list[int]]]:
    rng = XorShift64Star(seed)
    out = []
    for _ in range(count):
        word = rng.next_u64()
        out.append([[(word >> (3 * c + r)) & 1 for r in range(3)] for c in range(5)])
    return out


def uniform_entries(max_n: int = 5) -> list[Entry]:
    return [Entry(f"U({k},{n})", uniform_matroid(k, n)) for n in range(1, max_n + 1) for k in range(n + 1)]


def graphic_entries(max_edges: int = MAX_EDGES) -> list[Entry]:
    out = []
    for g in connected_multigraphs(max_edges):
        pairs = ";".join(f"{e.u}-{e.v}" for e in g.edges)
        out.append(Entry(f"G[{g.vertices}|{pairs}]", graphic_matroid(g), g))
    return out


def gf2_entries() -> list[Entry]:
    return [Entry(f"GF2[{i}]", gf2_linear_matroid(cols)) for i, cols in enumerate(_gf2_matrices())]


@lru_cache(maxsize=None)
def corpus() -> tuple[Entry, ...]:
    return tuple(uniform_entries() + graphic_entries() + gf2_entries())


def small_corpus(max_n: int = 4) -> tuple[Entry, ...]:
    return tuple(e for e in corpus() if e.matroid.n <= max_n)
