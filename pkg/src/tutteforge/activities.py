"""Order-dependent maps on almost-bases and over-bases, Tutte activities, and
the Tutte polynomial of a pre-matroid or a linking.

``phi`` sends an almost-basis D to D plus the order-smallest element of U(D);
``psi`` sends an over-basis Q to Q minus the order-smallest element of C(Q).
Internal and external activities are the fibre sizes of these two maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from . import bits
from .errors import NotABasis, NotAlmostBasis, NotOverBasis, UnverifiedLinking
from .matroid import PreMatroid, structure
from .multiset import BivarMultiSet
from .orders import LinearOrder

if TYPE_CHECKING:
    from .linkings import Linking


@dataclass(frozen=True)
class ActivityRecord:
    basis: int
    internal: int
    external: int
    internal_set: int
    external_set: int

    def __post_init__(self):
        assert self.internal == bits.size(self.internal_set)
        assert self.external == bits.size(self.external_set)
        assert self.internal_set & ~self.basis == 0
        assert self.external_set & self.basis == 0


@dataclass(frozen=True)
class OrderTables:
    """phi/psi and the chosen elements u/c for every almost- and over-basis."""

    u: dict  # almost-basis -> min U(D)
    phi: dict  # almost-basis -> basis
    c: dict  # over-basis -> min C(Q)
    psi: dict  # over-basis -> basis
    phi_fibres: dict  # basis -> tuple of almost-bases
    psi_fibres: dict  # basis -> tuple of over-bases


@lru_cache(maxsize=1 << 16)
def tables(m: PreMatroid, omega: LinearOrder) -> OrderTables:
    st = structure(m)
    u, phi, c, psi = {}, {}, {}, {}
    phi_f: dict[int, list[int]] = {b: [] for b in m.bases}
    psi_f: dict[int, list[int]] = {b: [] for b in m.bases}
    for d, ud in st.u.items():
        x = omega.min_of(ud)
        u[d] = x
        phi[d] = d | (1 << x)
        phi_f[phi[d]].append(d)
    for q, cq in st.c.items():
        y = omega.min_of(cq)
        c[q] = y
        psi[q] = q & ~(1 << y)
        psi_f[psi[q]].append(q)
    return OrderTables(
        u, phi, c, psi,
        {b: tuple(v) for b, v in phi_f.items()},
        {b: tuple(v) for b, v in psi_f.items()},
    )


def phi(m: PreMatroid, omega: LinearOrder, d: int) -> int:
    try:
        return tables(m, omega).phi[d]
    except KeyError:
        raise NotAlmostBasis(f"{m.ground.format(d)} is not an almost-basis") from None


def psi(m: PreMatroid, omega: LinearOrder, q: int) -> int:
    try:
        return tables(m, omega).psi[q]
    except KeyError:
        raise NotOverBasis(f"{m.ground.format(q)} is not an over-basis") from None


def phi_fibre(m: PreMatroid, omega: LinearOrder, b: int) -> tuple[int, ...]:
    return tables(m, omega).phi_fibres.get(b, ())


def internal_activity(m: PreMatroid, omega: LinearOrder, b: int) -> int:
    if b not in m.basis_set:
        raise NotABasis(f"{m.ground.format(b)} is not a basis")
    return len(tables(m, omega).phi_fibres[b])


def activities(m: PreMatroid, omega: LinearOrder, b: int) -> ActivityRecord:
    if b not in m.basis_set:
        raise NotABasis(f"{m.ground.format(b)} is not a basis")
    t = tables(m, omega)
    ins = 0
    for d in t.phi_fibres[b]:
        ins |= 1 << t.u[d]
    ext = 0
    for q in t.psi_fibres[b]:
        ext |= 1 << t.c[q]
    return ActivityRecord(b, len(t.phi_fibres[b]), len(t.psi_fibres[b]), ins, ext)


def tutte(m: PreMatroid, omega: LinearOrder) -> BivarMultiSet:
    """Sum over bases of x^internal y^external."""
    t = tables(m, omega)
    acc: dict[tuple[int, int], int] = {}
    for b in m.bases:
        key = (len(t.phi_fibres[b]), len(t.psi_fibres[b]))
        acc[key] = acc.get(key, 0) + 1
    return BivarMultiSet(acc)


def _require_verified(link: Linking) -> None:
    if not link.verified:
        raise UnverifiedLinking("linking has not been verified")


def whitney_multiset(link: Linking, omega: LinearOrder) -> BivarMultiSet:
    """Multi-image of the source bases under B -> (i(B), i(B*))."""
    _require_verified(link)
    src = tables(link.source, omega).phi_fibres
    dst = tables(link.target, omega).phi_fibres
    acc: dict[tuple[int, int], int] = {}
    for b, b_star in link.pairs():
        key = (len(src[b]), len(dst[b_star]))
        acc[key] = acc.get(key, 0) + 1
    return BivarMultiSet(acc)


def tutte_linking(link: Linking, omega: LinearOrder) -> BivarMultiSet:
    """Sum over source bases of x^i(B) y^i(B*); same data as the Whitney multi-set."""
    return whitney_multiset(link, omega)
