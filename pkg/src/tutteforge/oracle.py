"""Independent Tutte polynomial computations used to cross-check the activity
expansion: the corank-nullity subset sum, graph deletion-contraction, and a
matrix-tree spanning tree count."""

from __future__ import annotations

from math import comb

from . import bits
from .constructors import Graph
from .errors import BudgetExceeded, Disconnected, NegativeCoefficient, NoEdges
from .matroid import PreMatroid, require_matroid
from .multiset import BivarMultiSet

SignedBivarPoly = dict  # (i, j) -> nonzero int


def _add(p: SignedBivarPoly, key: tuple[int, int], c: int) -> None:
    v = p.get(key, 0) + c
    if v:
        p[key] = v
    else:
        p.pop(key, None)


def _narrow(p: SignedBivarPoly) -> BivarMultiSet:
    for key, c in p.items():
        if c < 0:
            raise NegativeCoefficient(f"coefficient {c} at x^{key[0]} y^{key[1]}")
    return BivarMultiSet(p)


def rank_of(m: PreMatroid, a: int) -> int:
    """Largest |B ∩ A| over bases, which is the rank of A in a matroid."""
    require_matroid(m)
    return _rank(m, a)


def _rank(m: PreMatroid, a: int) -> int:
    return max(bits.size(b & a) for b in m.bases)


def tutte_corank_nullity(m: PreMatroid) -> BivarMultiSet:
    """Sum over all subsets A of (x-1)^(r(X)-r(A)) (y-1)^(|A|-r(A))."""
    require_matroid(m)
    if (1 << m.n) > bits.budget():
        raise BudgetExceeded(f"2^{m.n} subsets exceed the enumeration budget")
    r_full = _rank(m, m.ground.full)
    # count of subsets per (corank, nullity) first, then expand binomially
    counts: dict[tuple[int, int], int] = {}
    for a in range(1 << m.n):
        r = _rank(m, a)
        key = (r_full - r, bits.size(a) - r)
        counts[key] = counts.get(key, 0) + 1
    poly: SignedBivarPoly = {}
    for (p, q), mult in counts.items():
        for i in range(p + 1):
            ci = comb(p, i) * (-1) ** (p - i)
            for j in range(q + 1):
                _add(poly, (i, j), mult * ci * comb(q, j) * (-1) ** (q - j))
    return _narrow(poly)


def _first_proper(g: Graph) -> int | None:
    """Index of the first edge that is neither a loop nor a bridge."""
    for i, e in enumerate(g.edges):
        if not e.is_loop and not g.is_bridge(i):
            return i
    return None


def _delcon(g: Graph) -> SignedBivarPoly:
    i = _first_proper(g)
    if i is None:
        loops = sum(1 for e in g.edges if e.is_loop)
        return {(len(g.edges) - loops, loops): 1}
    out = dict(_delcon(g.delete(i)))
    for key, c in _delcon(g.contract(i)).items():
        _add(out, key, c)
    return out


def tutte_deletion_contraction(g: Graph) -> BivarMultiSet:
    """T(G) = T(G - e) + T(G / e) on the first ordinary edge; bridges give x, loops y."""
    if not g.edges:
        raise NoEdges("graph has no edges")
    return _narrow(_delcon(g))


def _bareiss_det(a: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees via the matrix-tree theorem (loops ignored)."""
    if not g.is_connected():
        raise Disconnected("spanning trees need a connected graph")
    n = g.vertices
    lap = [[0] * n for _ in range(n)]
    for e in g.edges:
        if e.is_loop:
            continue
        lap[e.u][e.u] += 1
        lap[e.v][e.v] += 1
        lap[e.u][e.v] -= 1
        lap[e.v][e.u] -= 1
    return _bareiss_det([row[1:] for row in lap[1:]])
