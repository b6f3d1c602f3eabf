"""Linear orders on the ground set and the graph of orders joined by swaps of
consecutive elements."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterator, Sequence

from .errors import GroundMismatch, NotABijection, SameElement
from .matroid import GroundSet


@dataclass(frozen=True)
class LinearOrder:
    """``rank[x]`` is the position of element ``x``; position 0 is the smallest."""

    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(len(self.rank))):
            raise NotABijection(f"rank {self.rank} is not a permutation of 0..{len(self.rank) - 1}")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> LinearOrder:
        """Order listing elements smallest first."""
        rank = [-1] * len(seq)
        for pos, x in enumerate(seq):
            if not 0 <= x < len(seq) or rank[x] != -1:
                raise NotABijection(f"sequence {list(seq)} is not a permutation")
            rank[x] = pos
        return cls(tuple(rank))

    @classmethod
    def natural(cls, n: int) -> LinearOrder:
        return cls(tuple(range(n)))

    @classmethod
    def parse(cls, ground: GroundSet, text: str) -> LinearOrder:
        """Parse ``e1,e2,...`` (smallest first) against the ground labels."""
        labels = [t.strip() for t in text.split(",")] if text.strip() else []
        if len(labels) != ground.n:
            raise GroundMismatch(f"order lists {len(labels)} elements, ground set has {ground.n}")
        return cls.from_sequence([ground.index(t) for t in labels])

    @property
    def n(self) -> int:
        return len(self.rank)

    @cached_property
    def sequence(self) -> tuple[int, ...]:
        seq = [0] * self.n
        for x, pos in enumerate(self.rank):
            seq[pos] = x
        return tuple(seq)

    def less(self, x: int, y: int) -> bool:
        return self.rank[x] < self.rank[y]

    def min_of(self, mask: int) -> int:
        """The smallest element of a nonempty subset."""
        for x in self.sequence:
            if (mask >> x) & 1:
                return x
        raise ValueError("min of an empty set")

    def format(self, ground: GroundSet) -> str:
        return ",".join(ground.labels[x] for x in self.sequence)


@dataclass(frozen=True)
class Transposition:
    a: int
    z: int

    def __post_init__(self):
        if self.a == self.z:
            raise SameElement("a transposition needs two distinct elements")

    def __call__(self, x: int) -> int:
        if x == self.a:
            return self.z
        if x == self.z:
            return self.a
        return x

    def apply(self, mask: int) -> int:
        if ((mask >> self.a) ^ (mask >> self.z)) & 1:
            return mask ^ ((1 << self.a) | (1 << self.z))
        return mask

    def as_permutation(self, n: int) -> tuple[int, ...]:
        return tuple(self(x) for x in range(n))


@dataclass(frozen=True)
class OrderEdge:
    """Edge of the order graph, normalized so ``a`` precedes ``z`` in ``omega``."""

    omega: LinearOrder
    pi: LinearOrder
    eps: Transposition

    @classmethod
    def at(cls, omega: LinearOrder, x: int, y: int) -> OrderEdge:
        if not consecutive(omega, x, y):
            raise ValueError(f"elements {x}, {y} are not consecutive")
        a, z = (x, y) if omega.less(x, y) else (y, x)
        eps = Transposition(a, z)
        return cls(omega, act(eps.as_permutation(omega.n), omega), eps)

    @property
    def a(self) -> int:
        return self.eps.a

    @property
    def z(self) -> int:
        return self.eps.z

    def reversed(self) -> OrderEdge:
        """The same edge seen from ``pi``."""
        return OrderEdge(self.pi, self.omega, Transposition(self.z, self.a))

    def to_json(self, ground: GroundSet) -> dict:
        return {
            "omega": self.omega.format(ground),
            "pi": self.pi.format(ground),
            "swap": [ground.labels[self.a], ground.labels[self.z]],
        }


def act(sigma: Sequence[int], omega: LinearOrder) -> LinearOrder:
    """The order making ``sigma`` an isomorphism from ``omega`` onto it."""
    n = omega.n
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise NotABijection(f"{list(sigma)} is not a permutation of 0..{n - 1}")
    rank = [0] * n
    for x in range(n):
        rank[sigma[x]] = omega.rank[x]
    return LinearOrder(tuple(rank))


def compose(tau: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """``tau ∘ sigma``."""
    return tuple(tau[sigma[x]] for x in range(len(sigma)))


def consecutive(omega: LinearOrder, a: int, b: int) -> bool:
    if a == b:
        raise SameElement("consecutive() needs two distinct elements")
    return abs(omega.rank[a] - omega.rank[b]) == 1


def edges_at(omega: LinearOrder) -> list[OrderEdge]:
    seq = omega.sequence
    return [OrderEdge.at(omega, seq[i], seq[i + 1]) for i in range(omega.n - 1)]


def inversions(omega: LinearOrder, other: LinearOrder) -> int:
    seq = omega.sequence
    return sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if other.rank[seq[i]] > other.rank[seq[j]]
    )


def path_between(omega: LinearOrder, target: LinearOrder) -> list[OrderEdge]:
    """Adjacent-swap path from ``omega`` to ``target`` (bubble sort by target rank)."""
    if omega.n != target.n:
        raise GroundMismatch("orders live on ground sets of different size")
    seq = list(omega.sequence)
    cur = omega
    path: list[OrderEdge] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if target.rank[seq[i]] > target.rank[seq[i + 1]]:
                edge = OrderEdge.at(cur, seq[i], seq[i + 1])
                path.append(edge)
                cur = edge.pi
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                changed = True
    assert cur == target
    return path


def all_orders(n: int) -> Iterator[LinearOrder]:
    for seq in permutations(range(n)):
        yield LinearOrder.from_sequence(seq)
