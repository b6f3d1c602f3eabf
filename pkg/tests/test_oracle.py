from itertools import permutations
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import corpus_matroids
from tutteforge.constructors import Graph, graphic_matroid, uniform_matroid
from tutteforge.corpus import graphic_entries
from tutteforge.errors import BudgetExceeded, Disconnected, NegativeCoefficient, NoEdges, NotAMatroid
from tutteforge.matroid import dual
from tutteforge.oracle import (
    _bareiss_det,
    _narrow,
    rank_of,
    spanning_tree_count,
    tutte_corank_nullity,
    tutte_deletion_contraction,
)

K3 = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])


def leibniz(a):
    n = len(a)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += (-1) ** inv * prod(a[i][p[i]] for i in range(n))
    return total


def test_k3_all_methods():
    assert str(tutte_deletion_contraction(K3)) == "x^2 + x + y"
    assert str(tutte_corank_nullity(graphic_matroid(K3))) == "x^2 + x + y"


def test_loops_and_bridges():
    g = Graph.from_pairs(2, [(0, 1), (0, 0), (1, 1)])
    assert str(tutte_deletion_contraction(g)) == "xy^2"


def test_k4_spanning_trees():
    k4 = Graph.from_pairs(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert spanning_tree_count(k4) == 16
    assert tutte_deletion_contraction(k4).evaluate(1, 1) == 16


def test_rank():
    u = uniform_matroid(2, 4)
    assert [rank_of(u, a) for a in (0, 0b1, 0b11, 0b111)] == [0, 1, 2, 2]


def test_errors(two_blocks):
    with pytest.raises(NoEdges):
        tutte_deletion_contraction(Graph(2, ()))
    with pytest.raises(Disconnected):
        spanning_tree_count(Graph.from_pairs(3, [(0, 1)]))
    with pytest.raises(NotAMatroid):
        tutte_corank_nullity(two_blocks)
    with pytest.raises(NegativeCoefficient):
        _narrow({(1, 0): -1})


def test_budget(monkeypatch):
    monkeypatch.setenv("TUTTEFORGE_BUDGET", "8")
    with pytest.raises(BudgetExceeded):
        tutte_corank_nullity(uniform_matroid(2, 4))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(a):
    assert _bareiss_det(a) == leibniz(a)


@pytest.mark.parametrize("entry", graphic_entries(), ids=lambda e: e.name)
def test_graphic_oracles_agree(entry):
    g, m = entry.graph, entry.matroid
    poly = tutte_deletion_contraction(g)
    assert tutte_corank_nullity(m) == poly
    assert poly.evaluate(1, 1) == spanning_tree_count(g) == len(m.bases)
    assert poly.evaluate(2, 2) == 2 ** len(g.edges)


@given(corpus_matroids())
def test_corank_duality(m):
    assert tutte_corank_nullity(dual(m)) == tutte_corank_nullity(m).swapped()
