"""Bijections between two basis families that commute with transpositions.

A bijection B -> B* is a linking when, for every basis B and transposition t,
t(B) being a basis forces t(B*) to be the image of t(B) (condition L1), and
symmetrically from the target side (condition L2).  The only linkings between
matroids are the identity and complementation; ``classify_linking`` asserts it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from itertools import combinations, permutations
from typing import Iterator, Optional

from . import bits
from .errors import (
    ClassificationFailure,
    GroundMismatch,
    NotABasis,
    PreconditionViolated,
    UnverifiedLinking,
)
from .matroid import GroundSet, PreMatroid, dual, is_matroid, structure
from .orders import Transposition


@dataclass(frozen=True)
class Linking:
    """``map[i]`` is the index in ``target.bases`` of the image of ``source.bases[i]``."""

    source: PreMatroid
    target: PreMatroid
    map: tuple[int, ...]
    verified: bool = False

    def __post_init__(self):
        if self.source.ground != self.target.ground:
            raise GroundMismatch("linked pre-matroids must share a ground set")
        if sorted(self.map) != list(range(len(self.target.bases))) or len(self.map) != len(self.source.bases):
            raise ValueError("linking map is not a bijection between the basis families")

    @classmethod
    def from_pairs(cls, source: PreMatroid, target: PreMatroid, pairs: dict[int, int]) -> Linking:
        if set(pairs) != source.basis_set:
            raise ValueError("linking must be defined on every source basis")
        index = {b: i for i, b in enumerate(target.bases)}
        try:
            return cls(source, target, tuple(index[pairs[b]] for b in source.bases))
        except KeyError as e:
            raise ValueError(f"image {e.args[0]} is not a target basis") from None

    def image(self, b: int) -> int:
        return self.target.bases[self.map[self.source.index_of(b)]]

    def pairs(self) -> Iterator[tuple[int, int]]:
        for i, b in enumerate(self.source.bases):
            yield b, self.target.bases[self.map[i]]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs())

    def inverse(self) -> Linking:
        inv = [0] * len(self.map)
        for i, j in enumerate(self.map):
            inv[j] = i
        return Linking(self.target, self.source, tuple(inv), self.verified)


@dataclass(frozen=True)
class Violation:
    condition: str  # "L1" or "L2"
    basis: int
    transposition: Transposition


@dataclass(frozen=True)
class LinkingReport:
    is_linking: bool
    violated: Optional[Violation] = None

    def __post_init__(self):
        assert self.is_linking == (self.violated is None)


class LinkingKind(enum.Enum):
    IDENTITY = "Identity"
    COMPLEMENT = "Complement"


def violations(link: Linking) -> Iterator[Violation]:
    """Every failing (condition, basis, transposition), bases in canonical order."""
    fwd = link.as_dict()
    bwd = {v: k for k, v in fwd.items()}
    src, dst = link.source.basis_set, link.target.basis_set
    n = link.source.n
    for b in link.source.bases:
        b_star = fwd[b]
        for a, z in combinations(range(n), 2):
            t = Transposition(a, z)
            tb, tb_star = t.apply(b), t.apply(b_star)
            if tb in src and not (tb_star in dst and fwd[tb] == tb_star):
                yield Violation("L1", b, t)
            if tb_star in dst and not (tb in src and bwd[tb_star] == tb):
                yield Violation("L2", b, t)


def verify_linking(link: Linking) -> LinkingReport:
    first = next(violations(link), None)
    return LinkingReport(first is None, first)


def verified(link: Linking) -> Linking:
    """``link`` with its verified flag set; raises if a condition fails."""
    report = verify_linking(link)
    if not report.is_linking:
        v = report.violated
        g = link.source.ground
        raise UnverifiedLinking(
            f"{v.condition} fails at B={g.format(v.basis)} for the swap of "
            f"{g.labels[v.transposition.a]},{g.labels[v.transposition.z]}"
        )
    return replace(link, verified=True)


def identity_linking(m: PreMatroid) -> Linking:
    return verified(Linking(m, m, tuple(range(len(m.bases)))))


def complement_linking(m: PreMatroid) -> Linking:
    full = m.ground.full
    return verified(Linking.from_pairs(m, dual(m), {b: full & ~b for b in m.bases}))


def classify_linking(link: Linking) -> LinkingKind:
    if not link.verified:
        raise UnverifiedLinking("classify_linking needs a verified linking")
    full = link.source.ground.full
    if link.target == link.source and all(b == c for b, c in link.pairs()):
        return LinkingKind.IDENTITY
    if link.target == dual(link.source) and all(c == full & ~b for b, c in link.pairs()):
        return LinkingKind.COMPLEMENT
    raise ClassificationFailure("verified linking is neither the identity nor complementation")


def check_xy_lemma(link: Linking, s: int, x: int, y: int, a: int) -> bool:
    """If (S+x)* = A+y then x lies in U*(A); vacuously true when the premise fails."""
    src, dst = structure(link.source), structure(link.target)
    if s not in src.u:
        raise PreconditionViolated("S is not an almost-basis of the source")
    if a not in dst.u:
        raise PreconditionViolated("A is not an almost-basis of the target")
    if x == y or not (bits.has(src.u[s], x) and bits.has(src.u[s], y)):
        raise PreconditionViolated("x, y must be distinct elements of U(S)")
    if bits.has(a, y) or link.image(s | (1 << x)) != a | (1 << y):
        return True
    return bits.has(dst.u[a], x)


@dataclass(frozen=True)
class BasisStep:
    basis: int
    swap: Transposition  # carries the previous basis to this one


def basis_path(m: PreMatroid, start: int, end: int) -> list[BasisStep]:
    """Chain of bases from ``start`` to ``end``, one transposition per step.

    Each step swaps some x in B \\ end for the first y in end \\ B keeping B a
    basis; the overlap with ``end`` grows by one each time.
    """
    for given in (start, end):
        if given not in m.basis_set:
            raise NotABasis(f"{m.ground.format(given)} is not a basis")
    steps: list[BasisStep] = []
    cur = start
    while cur != end:
        for x in bits.elements(cur & ~end):
            nxt = next(
                (y for y in bits.elements(end & ~cur) if (cur ^ (1 << x) ^ (1 << y)) in m.basis_set),
                None,
            )
            if nxt is not None:
                t = Transposition(x, nxt)
                cur = t.apply(cur)
                steps.append(BasisStep(cur, t))
                break
        else:
            raise PreconditionViolated("no exchange step exists; the input is not a matroid")
    return steps


def all_bijections(source: PreMatroid, target: PreMatroid) -> Iterator[Linking]:
    """Every bijection between equal-size basis families, verified or not."""
    if len(source.bases) != len(target.bases):
        return
    for perm in permutations(range(len(target.bases))):
        yield Linking(source, target, perm)


def families(n: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """All nonempty families of subsets of an n-set with at most ``max_size`` members."""
    for k in range(1, max_size + 1):
        yield from combinations(range(1 << n), k)


def linking_from_labels(source: PreMatroid, target: PreMatroid, mapping: dict[str, str]) -> Linking:
    """Build a linking from ``{"1,2": "3", ...}`` where keys list basis labels."""
    g = source.ground

    def parse(text: str) -> int:
        text = text.strip()
        return g.mask([t.strip() for t in text.split(",")]) if text else 0

    return Linking.from_pairs(source, target, {parse(k): parse(v) for k, v in mapping.items()})


def labels_key(m: PreMatroid, b: int) -> str:
    return ",".join(m.ground.labels_of(b))


def mapping_to_labels(link: Linking) -> dict[str, str]:
    return {labels_key(link.source, b): labels_key(link.target, c) for b, c in link.pairs()}


def inverse_agrees(link: Linking) -> bool:
    return verify_linking(link).is_linking == verify_linking(link.inverse()).is_linking



@dataclass
class ClassificationSummary:
    bijections: int = 0
    linkings: int = 0
    matroid_linkings: int = 0
    identity: int = 0
    complement: int = 0
    other_linkings: int = 0  # verified linkings with a non-matroid end
    failures: list = field(default_factory=list)


def classification_search(max_n: int = 3, max_bases: int = 4) -> ClassificationSummary:
    """Try every bijection between every pair of equal-size basis families on
    ground sets of 1..max_n elements; every linking between two matroids must
    classify as identity or complementation."""
    out = ClassificationSummary()
    for n in range(1, max_n + 1):
        g = GroundSet.range(n)
        by_size: dict[int, list[PreMatroid]] = {}
        for fam in families(n, max_bases):
            by_size.setdefault(len(fam), []).append(PreMatroid(g, fam))
        for group in by_size.values():
            for src in group:
                for dst in group:
                    for link in all_bijections(src, dst):
                        out.bijections += 1
                        if next(violations(link), None) is not None:
                            continue
                        out.linkings += 1
                        if not (is_matroid(src) and is_matroid(dst)):
                            out.other_linkings += 1
                            continue
                        out.matroid_linkings += 1
                        try:
                            kind = classify_linking(replace(link, verified=True))
                        except ClassificationFailure:
                            out.failures.append({"source": str(src), "target": str(dst), "map": link.map})
                            continue
                        if kind is LinkingKind.IDENTITY:
                            out.identity += 1
                        else:
                            out.complement += 1
    return out
