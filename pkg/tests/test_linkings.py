import pytest
from hypothesis import given

from conftest import family
from strategies import corpus_matroids, prematroids
from tutteforge.errors import (
    ClassificationFailure,
    GroundMismatch,
    NotABasis,
    PreconditionViolated,
    UnverifiedLinking,
)
from tutteforge.linkings import (
    Linking,
    LinkingKind,
    all_bijections,
    basis_path,
    check_xy_lemma,
    classification_search,
    classify_linking,
    complement_linking,
    identity_linking,
    inverse_agrees,
    linking_from_labels,
    mapping_to_labels,
    verified,
    verify_linking,
    violations,
)
from tutteforge.matroid import dual, is_matroid
from tutteforge.orders import Transposition
from tutteforge.properties import xy_lemma


class TestCanonical:
    def test_identity(self, u23):
        link = identity_linking(u23)
        assert link.verified and all(b == c for b, c in link.pairs())
        assert classify_linking(link) is LinkingKind.IDENTITY

    def test_complement(self, u23):
        link = complement_linking(u23)
        assert mapping_to_labels(link) == {"1,2": "3", "1,3": "2", "2,3": "1"}
        assert classify_linking(link) is LinkingKind.COMPLEMENT

    @given(prematroids())
    def test_canonical_links_hold_for_any_family(self, m):
        assert verify_linking(identity_linking(m)).is_linking
        assert verify_linking(complement_linking(m)).is_linking


class TestVerify:
    def swapped(self, u23):
        return linking_from_labels(u23, u23, {"1,2": "1,2", "1,3": "2,3", "2,3": "1,3"})

    def test_swapped_targets_violate_l1(self, u23):
        link = self.swapped(u23)
        g = u23.ground
        assert not verify_linking(link).is_linking
        found = {(v.condition, v.basis, v.transposition) for v in violations(link)}
        assert ("L1", g.mask("12"), Transposition(1, 2)) in found

    def test_first_violation_is_canonical(self, u23):
        v = verify_linking(self.swapped(u23)).violated
        # bases in ascending order, swaps (a, z) with a < z
        assert (v.condition, v.basis, v.transposition) == ("L1", 0b011, Transposition(0, 2))

    def test_verified_raises(self, u23):
        with pytest.raises(UnverifiedLinking):
            verified(self.swapped(u23))

    def test_ground_mismatch(self, u23):
        other = family("abc", "ab", "ac", "bc")
        with pytest.raises(GroundMismatch):
            Linking(u23, other, (0, 1, 2))

    def test_not_bijection(self, u23):
        with pytest.raises(ValueError):
            Linking(u23, u23, (0, 0, 1))

    def test_classify_needs_verified(self, u23):
        with pytest.raises(UnverifiedLinking):
            classify_linking(Linking(u23, u23, (0, 1, 2)))

    def test_linking_between_non_matroids_escapes_classification(self):
        # {∅,{1}} -> {∅,{2}} satisfies both conditions but neither shape;
        # the classification only covers matroid ends
        src = family("12", "", "1")
        dst = family("12", "", "2")
        link = verified(Linking(src, dst, (0, 1)))
        with pytest.raises(ClassificationFailure):
            classify_linking(link)

    @given(prematroids(max_n=3))
    def test_inverse_agrees(self, m):
        for t in (m, dual(m)):
            for link in list(all_bijections(m, t))[:24]:
                assert inverse_agrees(link)


class TestClassification:
    def test_exhaustive_small_grounds(self):
        s = classification_search(max_n=3, max_bases=4)
        assert s.failures == []
        assert s.matroid_linkings == s.identity + s.complement > 0
        assert s.bijections > 100_000


class TestXYLemma:
    def test_identity_vacuous(self, u23):
        link = identity_linking(u23)
        g = u23.ground
        assert check_xy_lemma(link, g.mask("1"), 1, 2, g.mask("2"))

    def test_complement_u23(self, u23):
        link = complement_linking(u23)
        g = u23.ground
        assert check_xy_lemma(link, g.mask("1"), 1, 2, 0)

    def test_complement_exhaustive(self, u23):
        link = complement_linking(u23)
        assert xy_lemma(link) == []

    def test_preconditions(self, u23):
        link = identity_linking(u23)
        g = u23.ground
        with pytest.raises(PreconditionViolated):
            check_xy_lemma(link, g.mask("12"), 0, 1, g.mask("1"))
        with pytest.raises(PreconditionViolated):
            check_xy_lemma(link, g.mask("1"), 1, 1, g.mask("1"))
        with pytest.raises(PreconditionViolated):
            check_xy_lemma(link, g.mask("1"), 0, 1, g.mask("1"))


class TestBasisPath:
    @given(corpus_matroids())
    def test_chains(self, m):
        for b in m.bases:
            for b2 in m.bases:
                cur = b
                steps = basis_path(m, b, b2)
                for step in steps:
                    cur = step.swap.apply(cur)
                    assert cur == step.basis and cur in m.basis_set
                assert cur == b2
                assert len(steps) == (b & ~b2).bit_count()

    def test_not_a_basis(self, u23):
        with pytest.raises(NotABasis):
            basis_path(u23, 0b001, 0b011)

    def test_stalls_on_non_matroid(self, two_blocks):
        assert not is_matroid(two_blocks)
        with pytest.raises(PreconditionViolated):
            basis_path(two_blocks, 0b0011, 0b1100)
