"""What happens to phi across one edge of the order graph.

For an edge joining orders ``omega`` and ``pi`` that differ by swapping the
consecutive elements ``a`` (first in ``omega``) and ``z``, an almost-basis is
branching when its phi-image changes.  ``sigma`` is the involution on the
bases of a linked matroid that swaps ``a``/``z`` exactly on bases that are, or
are linked to, images of branching almost-bases; ``verify_sigma`` checks that
it carries the activity data of ``omega`` onto that of ``pi``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import bits
from .activities import tables, whitney_multiset
from .errors import NotABasis, NotAlmostBasis, NotAMatroid, UnverifiedLinking
from .linkings import Linking
from .matroid import PreMatroid, is_matroid, structure
from .orders import OrderEdge


class Side(enum.Enum):
    OMEGA = "omega"
    PI = "pi"


@dataclass(frozen=True)
class EdgeAnalysis:
    edge: OrderEdge
    matroid: PreMatroid
    branching: frozenset
    images_omega: frozenset
    images_pi: frozenset

    @property
    def images(self) -> frozenset:
        return self.images_omega | self.images_pi


@dataclass(frozen=True)
class AlmostStatus:
    branching: bool
    image: Optional[int] = None  # the common phi-image when not branching


@lru_cache(maxsize=1 << 16)
def branching_images(m: PreMatroid, edge: OrderEdge) -> EdgeAnalysis:
    t_w, t_p = tables(m, edge.omega), tables(m, edge.pi)
    branching = frozenset(d for d in t_w.phi if t_w.phi[d] != t_p.phi[d])
    return EdgeAnalysis(
        edge,
        m,
        branching,
        frozenset(t_w.phi[d] for d in branching),
        frozenset(t_p.phi[d] for d in branching),
    )


def _almost(m: PreMatroid, d: int) -> None:
    if d not in structure(m).u:
        raise NotAlmostBasis(f"{m.ground.format(d)} is not an almost-basis")


def classify_almost(m: PreMatroid, edge: OrderEdge, d: int) -> AlmostStatus:
    _almost(m, d)
    if d in branching_images(m, edge).branching:
        return AlmostStatus(True)
    return AlmostStatus(False, tables(m, edge.omega).phi[d])


def is_balanced_almost(m: PreMatroid, edge: OrderEdge, q: int, side: Side) -> bool:
    _almost(m, q)
    eq = edge.eps.apply(q)
    phi_w, phi_p = tables(m, edge.omega).phi, tables(m, edge.pi).phi
    if eq not in phi_w:
        return False
    if side is Side.OMEGA:
        return edge.eps.apply(phi_w[q]) == phi_p[eq]
    return edge.eps.apply(phi_p[q]) == phi_w[eq]


def is_edge_balanced_almost(m: PreMatroid, edge: OrderEdge, q: int) -> bool:
    return is_balanced_almost(m, edge, q, Side.OMEGA) and is_balanced_almost(m, edge, q, Side.PI)


def is_balanced_basis(m: PreMatroid, edge: OrderEdge, b: int, side: Side) -> bool:
    if b not in m.basis_set:
        raise NotABasis(f"{m.ground.format(b)} is not a basis")
    eb = edge.eps.apply(b)
    if eb not in m.basis_set:
        return False
    phi_w, phi_p = tables(m, edge.omega).phi, tables(m, edge.pi).phi
    if side is Side.PI:
        phi_w, phi_p = phi_p, phi_w
    return all(
        is_edge_balanced_almost(m, edge, q)
        for q in phi_w
        if phi_w[q] == b or phi_p[q] == eb
    )


def is_edge_balanced_basis(m: PreMatroid, edge: OrderEdge, b: int) -> bool:
    return is_balanced_basis(m, edge, b, Side.OMEGA) and is_balanced_basis(m, edge, b, Side.PI)


def _check_link(m: PreMatroid, link: Linking) -> None:
    if not link.verified:
        raise UnverifiedLinking("sigma needs a verified linking")
    if link.source != m:
        raise ValueError("linking source differs from the matroid")


def moved(m: PreMatroid, link: Linking, edge: OrderEdge) -> frozenset:
    """Bases B for which B or B* is a branching image, i.e. where sigma swaps."""
    _check_link(m, link)
    src = branching_images(m, edge).images
    dst = branching_images(link.target, edge).images
    return frozenset(b for b, c in link.pairs() if b in src or c in dst)


def sigma(m: PreMatroid, link: Linking, edge: OrderEdge) -> dict[int, int]:
    swap = moved(m, link, edge)
    return {b: edge.eps.apply(b) if b in swap else b for b in m.bases}


@dataclass
class Report:
    """Outcome of a verification pass; ``failures`` holds structured counterexamples."""

    checked: int = 0
    failures: list = field(default_factory=list)
    instances: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **context) -> None:
        self.failures.append(context)


class _Stop(Exception):
    pass


def verify_sigma(m: PreMatroid, link: Linking, edge: OrderEdge, full: bool = False) -> Report:
    """Check that sigma transports the omega activity data onto the pi data.

    Stops at the first failure unless ``full`` is set.
    """
    _check_link(m, link)
    g = m.ground
    report = Report()
    fmt = g.format
    where = edge.to_json(g)

    def fail(**context):
        report.fail(edge=where, **context)
        if not full:
            raise _Stop

    s = sigma(m, link, edge)
    swap = moved(m, link, edge)
    fwd = link.as_dict()
    src_w, src_p = tables(m, edge.omega), tables(m, edge.pi)
    dst_w, dst_p = tables(link.target, edge.omega), tables(link.target, edge.pi)
    try:
        for b in m.bases:
            report.checked += 1
            sb = s[b]
            if s.get(sb) != b:
                fail(check="involution", basis=fmt(b), sigma=fmt(sb))
            e = edge.eps.apply if b in swap else (lambda v: v)
            b_star, sb_star = fwd[b], fwd[sb]
            if e(b_star) != sb_star:
                fail(check="star-commutes", basis=fmt(b), image_star=fmt(e(b_star)), sigma_star=fmt(sb_star))

            f_w, f_p = src_w.phi_fibres[b], src_p.phi_fibres[sb]
            if len(f_w) != len(f_p):
                fail(check="internal-activity", basis=fmt(b), omega=len(f_w), pi=len(f_p))
            fs_w, fs_p = dst_w.phi_fibres[b_star], dst_p.phi_fibres[sb_star]
            if len(fs_w) != len(fs_p):
                fail(check="internal-activity-star", basis=fmt(b), omega=len(fs_w), pi=len(fs_p))

            for name, left, right, phi_p in (
                ("fibre-bijection", f_w, f_p, src_p.phi),
                ("fibre-bijection-star", fs_w, fs_p, dst_p.phi),
            ):
                image = {e(q) for q in left}
                target = sb if name == "fibre-bijection" else sb_star
                bad = [fmt(q) for q in left if phi_p.get(e(q)) != target]
                if bad or len(image) != len(left) or image != set(right):
                    fail(check=name, basis=fmt(b), off_target=bad,
                         image=sorted(fmt(v) for v in image), fibre=sorted(fmt(v) for v in right))

        w_omega, w_pi = whitney_multiset(link, edge.omega), whitney_multiset(link, edge.pi)
        report.checked += 1
        if w_omega != w_pi:
            fail(check="whitney", omega=w_omega.to_json(), pi=w_pi.to_json())
    except _Stop:
        pass
    return report


def check_linked_balance(m: PreMatroid, link: Linking, edge: OrderEdge) -> Report:
    """Non-branching Q whose phi-image is linked to A+a or A+z, A branching in
    the target: eps(Q) must be a non-branching almost-basis and both balanced."""
    if not link.verified:
        raise UnverifiedLinking("needs a verified linking")
    if not (is_matroid(m) and is_matroid(link.target)):
        raise NotAMatroid("both linked pre-matroids must be matroids")
    g = m.ground
    report = Report()
    src = branching_images(m, edge)
    dst_branching = branching_images(link.target, edge).branching
    phi_w = tables(m, edge.omega).phi
    fwd = link.as_dict()
    a, z = edge.a, edge.z
    for q, image in phi_w.items():
        if q in src.branching:
            continue
        report.checked += 1
        star = fwd[image]
        hit = False
        for elem, other in ((a, z), (z, a)):
            if bits.has(star, elem) and not bits.has(star, other):
                if star & ~(1 << elem) in dst_branching:
                    hit = True
        if not hit:
            continue
        report.instances += 1
        eq = edge.eps.apply(q)
        ok = (
            eq in phi_w
            and eq not in src.branching
            and is_edge_balanced_almost(m, edge, q)
            and is_edge_balanced_almost(m, edge, eq)
        )
        if not ok:
            report.fail(edge=edge.to_json(g), almost_basis=g.format(q), flipped=g.format(eq))
    return report
