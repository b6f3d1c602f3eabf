"""Ground sets, pre-matroids and the basic matroid checks.

A pre-matroid here is any nonempty family of subsets of the ground set; the
exchange property is checked separately and never assumed by construction.
Subsets are ``int`` bit masks over ``GroundSet`` indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

from . import bits
from .errors import (
    BudgetExceeded,
    EmptyFamily,
    InvalidGround,
    MatroidAxiomViolation,
    NotAlmostBasis,
    NotAMatroid,
    NotOverBasis,
    PreconditionViolated,
    UnknownLabel,
)

MAX_ELEMENTS = 64


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        if not 1 <= len(self.labels) <= MAX_ELEMENTS:
            raise InvalidGround(f"ground set must have 1..{MAX_ELEMENTS} elements, got {len(self.labels)}")
        if len(set(self.labels)) != len(self.labels):
            raise InvalidGround("ground labels must be distinct")

    @classmethod
    def of(cls, labels: Iterable) -> GroundSet:
        return cls(tuple(str(x) for x in labels))

    @classmethod
    def range(cls, n: int) -> GroundSet:
        """Ground set labelled ``"1" .. "n"``."""
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return bits.full(self.n)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownLabel(f"label {label!r} is not in the ground set") from None

    def mask(self, labels: Iterable) -> int:
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits.elements(mask)]

    def format(self, mask: int) -> str:
        """Render a subset as ``{1,2}`` for messages."""
        return "{" + ",".join(self.labels_of(mask)) + "}"


@dataclass(frozen=True)
class PreMatroid:
    """Nonempty family of bases; ``bases`` sorted ascending as integers, no duplicates."""

    ground: GroundSet
    bases: tuple[int, ...]
    basis_set: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.bases:
            raise EmptyFamily("a pre-matroid needs at least one basis")
        canon = tuple(sorted(set(self.bases)))
        if canon != self.bases:
            object.__setattr__(self, "bases", canon)
        if canon[-1] >> self.ground.n:
            raise UnknownLabel("basis mentions an element outside the ground set")
        object.__setattr__(self, "basis_set", frozenset(canon))

    @classmethod
    def from_masks(cls, ground: GroundSet, masks: Iterable[int]) -> PreMatroid:
        return cls(ground, tuple(masks))

    @property
    def n(self) -> int:
        return self.ground.n

    def is_basis(self, mask: int) -> bool:
        return mask in self.basis_set

    def index_of(self, mask: int) -> int:
        return self.bases.index(mask)

    def label_family(self) -> list[list[str]]:
        return [self.ground.labels_of(b) for b in self.bases]

    def __str__(self) -> str:
        return "{" + ", ".join(self.ground.format(b) for b in self.bases) + "}"


@dataclass(frozen=True)
class ExchangeReport:
    holds: bool
    witness: Optional[tuple[int, int, int]] = None  # (B1, B2, x)

    def __post_init__(self):
        assert self.holds == (self.witness is None)

    def describe(self, ground: GroundSet) -> Optional[dict]:
        if self.witness is None:
            return None
        b1, b2, x = self.witness
        return {"B1": ground.labels_of(b1), "B2": ground.labels_of(b2), "x": ground.labels[x]}


def validate_prematroid(ground: GroundSet, family: Sequence[Iterable]) -> PreMatroid:
    """Build a canonical pre-matroid from lists of element labels."""
    if len(family) == 0:
        raise EmptyFamily("the family of bases is empty")
    return PreMatroid(ground, tuple(ground.mask(b) for b in family))


def check_exchange(m: PreMatroid) -> ExchangeReport:
    for b1 in m.bases:
        for b2 in m.bases:
            for x in bits.elements(b1 & ~b2):
                rest = b1 & ~(1 << x)
                if not any(rest | (1 << y) in m.basis_set for y in bits.elements(b2 & ~b1)):
                    return ExchangeReport(False, (b1, b2, x))
    return ExchangeReport(True)


def check_symmetric_exchange(m: PreMatroid) -> ExchangeReport:
    for b1 in m.bases:
        for b2 in m.bases:
            for x in bits.elements(b1 & ~b2):
                ok = False
                for y in bits.elements(b2 & ~b1):
                    flip = (1 << x) | (1 << y)
                    if (b1 ^ flip) in m.basis_set and (b2 ^ flip) in m.basis_set:
                        ok = True
                        break
                if not ok:
                    return ExchangeReport(False, (b1, b2, x))
    return ExchangeReport(True)


@lru_cache(maxsize=4096)
def is_matroid(m: PreMatroid) -> bool:
    return check_exchange(m).holds


def require_matroid(m: PreMatroid) -> None:
    if not is_matroid(m):
        raise NotAMatroid(f"exchange property fails: {check_exchange(m).describe(m.ground)}")


def is_antichain(m: PreMatroid) -> bool:
    """True when no basis properly contains another."""
    return not any(b1 != b2 and b1 & b2 == b1 for b1 in m.bases for b2 in m.bases)


@dataclass(frozen=True)
class Structure:
    """Almost-bases with their U sets and over-bases with their C sets."""

    u: dict  # almost-basis -> U(D)
    c: dict  # over-basis -> C(Q)


@lru_cache(maxsize=4096)
def structure(m: PreMatroid) -> Structure:
    u: dict[int, int] = {}
    c: dict[int, int] = {}
    full = m.ground.full
    for b in m.bases:
        for x in bits.elements(b):
            d = b & ~(1 << x)
            u[d] = u.get(d, 0) | (1 << x)
        for y in bits.elements(full & ~b):
            q = b | (1 << y)
            c[q] = c.get(q, 0) | (1 << y)
    return Structure(dict(sorted(u.items())), dict(sorted(c.items())))


def almost_bases(m: PreMatroid) -> list[int]:
    return list(structure(m).u)


def over_bases(m: PreMatroid) -> list[int]:
    return list(structure(m).c)


def u_set(m: PreMatroid, d: int) -> int:
    try:
        return structure(m).u[d]
    except KeyError:
        raise NotAlmostBasis(f"{m.ground.format(d)} is not an almost-basis") from None


def c_set(m: PreMatroid, q: int) -> int:
    try:
        return structure(m).c[q]
    except KeyError:
        raise NotOverBasis(f"{m.ground.format(q)} is not an over-basis") from None


@lru_cache(maxsize=4096)
def dual(m: PreMatroid) -> PreMatroid:
    full = m.ground.full
    return PreMatroid(m.ground, tuple(full & ~b for b in m.bases))


def is_independent(m: PreMatroid, y: int) -> bool:
    return any(y & b == y for b in m.bases)


def _check_budget(count: int) -> None:
    if count > bits.budget():
        raise BudgetExceeded(f"{count} subsets exceed the enumeration budget of {bits.budget()}")


def is_circuit(m: PreMatroid, y: int) -> bool:
    if y == 0 or is_independent(m, y):
        return False
    return all(is_independent(m, y & ~(1 << x)) for x in bits.elements(y))


def circuits(m: PreMatroid) -> list[int]:
    """All circuits, by exhaustive subset enumeration (budget-guarded)."""
    _check_budget(1 << m.n)
    return [y for y in range(1, 1 << m.n) if is_circuit(m, y)]


def circuit_of_overbasis(m: PreMatroid, q: int) -> int:
    """C(Q), asserted to be a circuit and the only circuit inside Q."""
    require_matroid(m)
    cq = c_set(m, q)
    if not is_circuit(m, cq):
        raise MatroidAxiomViolation(f"C({m.ground.format(q)}) is not a circuit")
    _check_budget(1 << bits.size(q))
    inside = [y for y in bits.submasks(q) if is_circuit(m, y)]
    if inside != [cq]:
        raise MatroidAxiomViolation(f"{m.ground.format(q)} contains circuits {inside}, expected only C(Q)")
    return cq


def max_over_extend(m: PreMatroid, j: int, s: int) -> int:
    """A basis B with J ⊆ B ⊆ S, grown from J by smallest-index augmentation."""
    if not is_matroid(m):
        raise PreconditionViolated("input is not a matroid")
    if j & ~s:
        raise PreconditionViolated("J is not a subset of S")
    if not any(b & ~s == 0 for b in m.bases):
        raise PreconditionViolated("S contains no basis")
    if not is_independent(m, j):
        raise PreconditionViolated("J is not independent")
    cur = j
    while cur not in m.basis_set:
        for x in bits.elements(s & ~cur):
            if is_independent(m, cur | (1 << x)):
                cur |= 1 << x
                break
        else:
            raise MatroidAxiomViolation("augmentation stalled before reaching a basis")
    return cur
