"""Bit-vector helpers. A subset of an ``n``-element ground set is an ``int``
whose bit ``i`` is set iff element ``i`` belongs to it."""

import os
from typing import Iterator

DEFAULT_BUDGET = 1 << 22


def budget() -> int:
    """Subset-enumeration budget, overridable with ``TUTTEFORGE_BUDGET``."""
    raw = os.environ.get("TUTTEFORGE_BUDGET")
    return int(raw, 0) if raw else DEFAULT_BUDGET


def full(n: int) -> int:
    return (1 << n) - 1


def elements(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: int) -> int:
    return mask.bit_count()


def has(mask: int, x: int) -> bool:
    return (mask >> x) & 1 == 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, in increasing integer order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def swap(mask: int, a: int, z: int) -> int:
    """Apply the transposition of ``a`` and ``z`` to a subset."""
    if ((mask >> a) ^ (mask >> z)) & 1:
        return mask ^ ((1 << a) | (1 << z))
    return mask
