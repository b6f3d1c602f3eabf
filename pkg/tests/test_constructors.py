import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import family
from tutteforge.constructors import Graph, gf2_linear_matroid, gf2_rank, graphic_matroid, uniform_matroid
from tutteforge.corpus import connected_multigraphs, corpus, gf2_entries
from tutteforge.errors import BadParameters, EmptyMatrix, InvalidGround, NoEdges
from tutteforge.matroid import check_exchange, check_symmetric_exchange


def k3():
    return Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])


class TestGraph:
    def test_validation(self):
        with pytest.raises(InvalidGround):
            Graph.from_pairs(2, [(0, 2)])
        with pytest.raises(InvalidGround):
            Graph.from_pairs(2, [(0, 1), (0, 1)], ids=["a", "a"])

    def test_components_and_bridges(self):
        g = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        assert g.is_connected()
        assert [g.is_bridge(i) for i in range(4)] == [False, False, False, True]
        assert Graph.from_pairs(3, [(0, 1)]).components() == 2

    def test_contract_relabels(self):
        g = k3().contract(0)
        assert g.vertices == 2
        assert sorted((e.u, e.v) for e in g.edges) == [(0, 1), (0, 1)]


class TestGraphic:
    def test_k3_is_u23(self):
        assert graphic_matroid(k3()) == uniform_matroid(2, 3)

    def test_path_single_basis(self):
        m = graphic_matroid(Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3)]))
        assert m.bases == (0b111,)

    def test_loop(self):
        m = graphic_matroid(Graph.from_pairs(1, [(0, 0)]))
        assert m.bases == (0,)

    def test_no_edges(self):
        with pytest.raises(NoEdges):
            graphic_matroid(Graph(3, ()))

    def test_forest_of_disconnected_graph(self):
        m = graphic_matroid(Graph.from_pairs(4, [(0, 1), (0, 1), (2, 3)]))
        assert set(m.bases) == {0b101, 0b110}

    def test_edge_ids_become_labels(self):
        g = Graph.from_pairs(2, [(0, 1), (0, 1)], ids=["e1", "e2"])
        assert graphic_matroid(g).ground.labels == ("e1", "e2")


class TestUniform:
    def test_u23(self, u23):
        assert uniform_matroid(2, 3) == u23

    def test_rank_zero(self):
        assert uniform_matroid(0, 2).bases == (0,)

    @pytest.mark.parametrize("k,n", [(3, 2), (-1, 2), (0, 0), (1, 65)])
    def test_bad(self, k, n):
        with pytest.raises(BadParameters):
            uniform_matroid(k, n)


class TestGF2:
    def test_u23(self, u23):
        assert gf2_linear_matroid([[1, 0], [0, 1], [1, 1]]) == u23

    def test_zero_column(self):
        assert gf2_linear_matroid([[0]]).bases == (0,)

    def test_parallel(self):
        assert gf2_linear_matroid([[1], [1]]) == family("12", "1", "2")

    def test_errors(self):
        with pytest.raises(EmptyMatrix):
            gf2_linear_matroid([])
        with pytest.raises(BadParameters):
            gf2_linear_matroid([[1, 0], [1]])

    @given(st.lists(st.integers(0, 63), max_size=8))
    def test_rank_matches_span_size(self, vecs):
        span = {0}
        for v in vecs:
            span |= {s ^ v for s in span}
        assert 1 << gf2_rank(vecs) == len(span)


def test_every_corpus_member_is_a_matroid():
    for e in corpus():
        assert check_exchange(e.matroid).holds, e.name
        assert check_symmetric_exchange(e.matroid).holds, e.name


def test_corpus_shape():
    graphs = connected_multigraphs()
    assert all(g.is_connected() for g in graphs)
    assert all(1 <= len(g.edges) <= 5 for g in graphs)
    # by edge count; cross-checked by canonicalising under all vertex permutations
    by_m = [sum(1 for g in graphs if len(g.edges) == m) for m in range(1, 6)]
    assert by_m == [2, 4, 11, 30, 95]
    assert len(gf2_entries()) == 20
    assert all(e.matroid.n == 5 for e in gf2_entries())
