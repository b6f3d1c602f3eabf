"""Multi-sets, multi-images, and multi-subsets of N x N read as polynomials."""

from __future__ import annotations

import re
from collections.abc import Mapping
from typing import Callable, Iterable, Iterator, Union

from .errors import CountOverflow, PartialMap

U64_MAX = (1 << 64) - 1
I64_MIN, I64_MAX = -(1 << 63), (1 << 63) - 1


def checked_add(a: int, b: int) -> int:
    s = a + b
    if s > U64_MAX:
        raise CountOverflow(f"count {s} does not fit in 64 bits")
    return s


class MultiSet(Mapping):
    """Immutable finitely supported map to positive counts; absent keys count 0."""

    __slots__ = ("_counts", "_hash")

    def __init__(self, counts: Union[Mapping, Iterable, None] = None):
        acc: dict = {}
        if isinstance(counts, Mapping):
            items = counts.items()
        else:
            items = ((k, 1) for k in (counts or ()))
        for key, c in items:
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for {key!r}")
            if c:
                acc[key] = checked_add(acc.get(key, 0), c)
        self._counts = acc
        self._hash = None

    def __getitem__(self, key):
        return self._counts[key]

    def get(self, key, default=0):
        return self._counts.get(key, default)

    def __iter__(self) -> Iterator:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiSet):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {v}" for k, v in sorted(self._counts.items(), key=lambda kv: repr(kv[0])))
        return f"{type(self).__name__}({{{inner}}})"

    @property
    def support(self) -> frozenset:
        return frozenset(self._counts)

    def total(self) -> int:
        t = 0
        for c in self._counts.values():
            t = checked_add(t, c)
        return t


def multi_image(f: Union[Callable, Mapping], m: Union[MultiSet, Iterable]) -> MultiSet:
    """``f[m](r) = sum of m(s) over s with f(s) = r``; a plain iterable counts each item once."""
    source = m if isinstance(m, MultiSet) else MultiSet(m)
    acc: dict = {}
    for s, c in source.items():
        try:
            r = f[s] if isinstance(f, Mapping) else f(s)
        except KeyError:
            raise PartialMap(f"map is undefined at {s!r}") from None
        acc[r] = checked_add(acc.get(r, 0), c)
    return MultiSet(acc)


class BivarMultiSet(MultiSet):
    """Multi-subset of N x N; ``m[(i, j)]`` is the coefficient of x^i y^j."""

    __slots__ = ()

    def __init__(self, counts: Union[Mapping, Iterable, None] = None):
        super().__init__(counts)
        for key in self._counts:
            i, j = key
            if not (isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0):
                raise ValueError(f"exponents must be natural numbers, got {key!r}")

    @classmethod
    def from_multiset(cls, m: Mapping) -> BivarMultiSet:
        return cls(dict(m))

    def terms(self) -> list[tuple[int, int, int]]:
        """``(i, j, coeff)`` sorted by x exponent, then y exponent, both descending."""
        return sorted(((i, j, c) for (i, j), c in self._counts.items()), key=lambda t: (-t[0], -t[1]))

    def swapped(self) -> BivarMultiSet:
        """The polynomial with x and y exchanged."""
        return BivarMultiSet({(j, i): c for (i, j), c in self._counts.items()})

    def evaluate(self, x: int, y: int) -> int:
        return evaluate(self, x, y)

    def to_json(self) -> dict:
        return {"terms": [{"x": i, "y": j, "coeff": c} for i, j, c in self.terms()]}

    @classmethod
    def from_json(cls, doc: Mapping) -> BivarMultiSet:
        return cls({(int(t["x"]), int(t["y"])): int(t["coeff"]) for t in doc["terms"]})

    def __str__(self) -> str:
        return render(self)


def to_polynomial(m: BivarMultiSet) -> list[tuple[int, int, int]]:
    return m.terms()


def _monomial(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def render(m: BivarMultiSet) -> str:
    """Text form such as ``x^2 + 3xy + y``; the zero polynomial is ``0``."""
    parts = []
    for i, j, c in m.terms():
        mono = _monomial("x", i) + _monomial("y", j)
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"^(\d*)\*?(?:x(?:\^(\d+))?)?\*?(?:y(?:\^(\d+))?)?$")


def parse(text: str) -> BivarMultiSet:
    """Inverse of ``render``; also accepts ``*`` between factors."""
    text = text.strip()
    if text == "0":
        return BivarMultiSet()
    acc: dict[tuple[int, int], int] = {}
    for raw in text.split("+"):
        term = raw.replace(" ", "")
        match = _TERM.match(term)
        if not term or match is None:
            raise ValueError(f"cannot parse term {raw!r}")
        coeff_s, xe, ye = match.groups()
        has_x, has_y = "x" in term, "y" in term
        if not (coeff_s or has_x or has_y):
            raise ValueError(f"cannot parse term {raw!r}")
        i = (int(xe) if xe else 1) if has_x else 0
        j = (int(ye) if ye else 1) if has_y else 0
        c = int(coeff_s) if coeff_s else 1
        acc[(i, j)] = checked_add(acc.get((i, j), 0), c)
    return BivarMultiSet(acc)


def evaluate(m: Mapping, x: int, y: int) -> int:
    """``sum m(i,j) x^i y^j``; raises ``CountOverflow`` outside signed 64-bit range."""
    total = 0
    for (i, j), c in m.items():
        term = c * x**i * y**j
        if not I64_MIN <= term <= I64_MAX:
            raise CountOverflow(f"term {c}*{x}^{i}*{y}^{j} overflows 64 bits")
        total += term
        if not I64_MIN <= total <= I64_MAX:
            raise CountOverflow("polynomial value overflows 64 bits")
    return total

