import pytest
from hypothesis import given
from hypothesis import strategies as st

from tutteforge.errors import CountOverflow, PartialMap
from tutteforge.multiset import BivarMultiSet, MultiSet, checked_add, evaluate, multi_image, parse, render

U23_POLY = BivarMultiSet({(2, 0): 1, (1, 0): 1, (0, 1): 1})

bivar = st.dictionaries(
    st.tuples(st.integers(0, 6), st.integers(0, 6)), st.integers(1, 10**6), max_size=8
).map(BivarMultiSet)


class TestMultiSet:
    def test_zero_counts_dropped(self):
        m = MultiSet({"a": 2, "b": 0})
        assert set(m) == {"a"} and m.get("b") == 0
        assert m.total() == 2

    def test_from_iterable(self):
        assert MultiSet("abca") == MultiSet({"a": 2, "b": 1, "c": 1})

    def test_hashable_and_equal(self):
        assert hash(MultiSet({"a": 1})) == hash(MultiSet(["a"]))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            MultiSet({"a": -1})

    def test_overflow(self):
        with pytest.raises(CountOverflow):
            checked_add(2**64 - 1, 1)


class TestMultiImage:
    def test_collapse(self):
        f = {"a": "x", "b": "x", "c": "y"}
        assert multi_image(f, {"a", "b", "c"}) == MultiSet({"x": 2, "y": 1})

    def test_injective(self):
        assert set(multi_image(lambda s: s * 2, [1, 2, 3]).values()) == {1}

    def test_partial(self):
        with pytest.raises(PartialMap):
            multi_image({"a": 1}, ["a", "b"])

    def test_weights_carry(self):
        assert multi_image(len, MultiSet({"ab": 3, "cd": 2, "e": 1})) == MultiSet({2: 5, 1: 1})

    @given(st.integers(0, 5).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(0, 3), min_size=n, max_size=n),
        st.permutations(range(n)),
    )))
    def test_precomposing_a_bijection(self, data):
        n, values, perm = data
        f = dict(enumerate(values))
        g = dict(enumerate(perm))
        assert multi_image(f, range(n)) == multi_image(lambda s: f[g[s]], range(n))


class TestPolynomial:
    def test_render_u23(self):
        assert render(U23_POLY) == "x^2 + x + y"
        assert str(U23_POLY) == "x^2 + x + y"

    def test_render_conventions(self):
        assert render(BivarMultiSet()) == "0"
        assert render(BivarMultiSet({(0, 0): 4, (1, 1): 3, (0, 2): 1})) == "3xy + y^2 + 4"

    def test_term_order(self):
        assert BivarMultiSet({(0, 1): 1, (1, 0): 1, (1, 2): 2}).terms() == [(1, 2, 2), (1, 0, 1), (0, 1, 1)]

    def test_evaluate(self):
        assert evaluate(U23_POLY, 1, 1) == 3
        assert U23_POLY.evaluate(2, 3) == 4 + 2 + 3

    def test_evaluate_overflow(self):
        with pytest.raises(CountOverflow):
            evaluate(BivarMultiSet({(70, 0): 1}), 2, 1)

    def test_parse_star(self):
        assert parse("2*x^2*y + x*y + 1") == BivarMultiSet({(2, 1): 2, (1, 1): 1, (0, 0): 1})

    def test_parse_rejects(self):
        with pytest.raises(ValueError):
            parse("x^2 + z")
        with pytest.raises(ValueError):
            parse("x + ")

    def test_exponents_natural(self):
        with pytest.raises(ValueError):
            BivarMultiSet({(-1, 0): 1})

    @given(bivar)
    def test_render_parse_round_trip(self, m):
        assert parse(render(m)) == m

    @given(bivar)
    def test_json_round_trip(self, m):
        assert BivarMultiSet.from_json(m.to_json()) == m

    @given(bivar, st.integers(-3, 3), st.integers(-3, 3))
    def test_polynomial_of_a_multi_image(self, m, x, y):
        # expanding each point with its multiplicity gives the same value
        points = [key for key, c in m.items() for _ in range(min(c, 3))]
        small = BivarMultiSet(multi_image(lambda p: p, points))
        assert evaluate(small, x, y) == sum(x**i * y**j for i, j in points)

    def test_swapped(self):
        assert U23_POLY.swapped() == BivarMultiSet({(0, 2): 1, (0, 1): 1, (1, 0): 1})
