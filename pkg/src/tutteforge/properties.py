"""Exhaustive property checks on small matroids.

Every checker returns a list of counterexample dicts; an empty list means the
property held for every instance it quantified over.  Checkers are grouped by
what they quantify over: a matroid, an order-graph edge of a matroid, a
linking, or an edge together with a linking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Callable, Iterable

from . import bits
from .activities import activities, phi, psi, tables, tutte
from .balance import (
    Side,
    branching_images,
    check_linked_balance,
    is_balanced_basis,
    is_edge_balanced_almost,
    is_edge_balanced_basis,
    moved,
    sigma,
    verify_sigma,
)
from .errors import MatroidAxiomViolation
from .linkings import (
    Linking,
    basis_path,
    check_xy_lemma,
    complement_linking,
    identity_linking,
    verify_linking,
)
from .matroid import (
    PreMatroid,
    almost_bases,
    c_set,
    circuit_of_overbasis,
    circuits,
    dual,
    is_antichain,
    is_independent,
    max_over_extend,
    over_bases,
    structure,
    u_set,
)
from .multiset import BivarMultiSet, evaluate, multi_image, parse, render
from .orders import LinearOrder, OrderEdge, all_orders

Failures = list


# --- matroid-level ---------------------------------------------------------


def antichain(m: PreMatroid) -> Failures:
    return [] if is_antichain(m) else [{"matroid": str(m)}]


def max_over(m: PreMatroid) -> Failures:
    out = []
    for s in range(1 << m.n):
        if not any(b & ~s == 0 for b in m.bases):
            continue
        for j in bits.submasks(s):
            if not is_independent(m, j):
                continue
            b = max_over_extend(m, j, s)
            if b not in m.basis_set or j & ~b or b & ~s:
                out.append({"J": m.ground.format(j), "S": m.ground.format(s), "B": m.ground.format(b)})
    return out


def overbasis_circuit(m: PreMatroid) -> Failures:
    """C(Q) is a circuit and the only circuit inside the over-basis Q."""
    out = []
    for q in over_bases(m):
        try:
            circuit_of_overbasis(m, q)
        except MatroidAxiomViolation as e:
            out.append({"Q": m.ground.format(q), "error": str(e)})
    return out


def _blocked_pairs(m: PreMatroid) -> Iterable[tuple[int, int]]:
    """(A, Y): A an almost-basis, Y disjoint from A with A + y never a basis."""
    full = m.ground.full
    for a, ua in structure(m).u.items():
        free = full & ~a & ~ua
        for y in bits.submasks(free):
            yield a, y


def _contains_basis(m: PreMatroid, s: int) -> bool:
    return any(b & ~s == 0 for b in m.bases)


def blocked_union_has_no_basis(m: PreMatroid) -> Failures:
    return [
        {"A": m.ground.format(a), "Y": m.ground.format(y)}
        for a, y in _blocked_pairs(m)
        if _contains_basis(m, a | y)
    ]


def circuit_extension_has_no_basis(m: PreMatroid) -> Failures:
    out = []
    circs = circuits(m)
    for a, y in _blocked_pairs(m):
        ay = a | y
        for c_mask in circs:
            for c in bits.elements(c_mask & ~ay):
                if (c_mask & ~(1 << c)) & ~ay == 0 and _contains_basis(m, ay | (1 << c)):
                    out.append({"A": m.ground.format(a), "Y": m.ground.format(y),
                                "C": m.ground.format(c_mask), "c": m.ground.labels[c]})
    return out


def u_c_intersection(m: PreMatroid) -> Failures:
    st = structure(m)
    return [
        {"A": m.ground.format(a), "Q": m.ground.format(q)}
        for a, ua in st.u.items()
        for q, cq in st.c.items()
        if bits.size(ua & cq) == 1
    ]


def non_triangle(m: PreMatroid) -> Failures:
    """C + a, C + z almost-bases and C + a + z not a basis force U(C+a) = U(C+z)."""
    st = structure(m)
    out = []
    for c in range(1 << m.n):
        rest = [x for x in range(m.n) if not bits.has(c, x)]
        for a, z in combinations(rest, 2):
            ca, cz = c | (1 << a), c | (1 << z)
            if ca in st.u and cz in st.u and (ca | cz) not in m.basis_set and st.u[ca] != st.u[cz]:
                out.append({"C": m.ground.format(c), "a": m.ground.labels[a], "z": m.ground.labels[z]})
    return out


def triangle(m: PreMatroid) -> Failures:
    """For a triangle (C; a, z, d), every e in U(C+z) lies in U(C+a) or U(C+d)."""
    st = structure(m)
    out = []
    B = m.basis_set
    for c in range(1 << m.n):
        rest = [x for x in range(m.n) if not bits.has(c, x)]
        for u, v, w in combinations(rest, 3):
            pu, pv, pw = 1 << u, 1 << v, 1 << w
            if not (c | pu | pv in B and c | pu | pw in B and c | pv | pw in B):
                continue
            for z, a, d in ((u, v, w), (v, u, w), (w, u, v)):
                uz = st.u[c | (1 << z)]
                ua, ud = st.u[c | (1 << a)], st.u[c | (1 << d)]
                if uz & ~(ua | ud):
                    out.append({"C": m.ground.format(c), "z": m.ground.labels[z],
                                "missing": m.ground.format(uz & ~(ua | ud))})
    return out


def duality_sets(m: PreMatroid) -> Failures:
    """Over-bases of M are complements of almost-bases of the dual, and
    C(Q) equals U computed in the dual at the complement of Q."""
    d = dual(m)
    full = m.ground.full
    out = []
    over = set(over_bases(m))
    dual_almost = set(almost_bases(d))
    if {full & ~q for q in over} != dual_almost:
        out.append({"check": "over/almost complement"})
    for q in over:
        if c_set(m, q) != u_set(d, full & ~q):
            out.append({"check": "C/U duality", "Q": m.ground.format(q)})
    return out


def duality_maps(m: PreMatroid, orders: Iterable[LinearOrder]) -> Failures:
    """psi(Q) complemented is phi of the dual at Q complemented; external
    activity of B equals internal activity of B's complement in the dual."""
    d = dual(m)
    full = m.ground.full
    out = []
    for w in orders:
        for q in over_bases(m):
            if full & ~psi(m, w, q) != phi(d, w, full & ~q):
                out.append({"check": "psi/phi", "order": w.format(m.ground), "Q": m.ground.format(q)})
        for b in m.bases:
            if activities(m, w, b).external != activities(d, w, full & ~b).internal:
                out.append({"check": "e/i", "order": w.format(m.ground), "B": m.ground.format(b)})
    return out


def fibre_partition(m: PreMatroid, orders: Iterable[LinearOrder]) -> Failures:
    out = []
    na, no = len(almost_bases(m)), len(over_bases(m))
    for w in orders:
        recs = [activities(m, w, b) for b in m.bases]
        if sum(r.internal for r in recs) != na or sum(r.external for r in recs) != no:
            out.append({"order": w.format(m.ground)})
    return out


MATROID_CHECKS: dict[str, Callable[[PreMatroid], Failures]] = {
    "antichain": antichain,
    "max-over-extension": max_over,
    "over-basis-circuit": overbasis_circuit,
    "blocked-union-no-basis": blocked_union_has_no_basis,
    "circuit-extension-no-basis": circuit_extension_has_no_basis,
    "u-c-intersection": u_c_intersection,
    "non-triangle": non_triangle,
    "triangle": triangle,
    "duality-sets": duality_sets,
}


# --- per edge ---------------------------------------------------------------


def branching_is_balanced(m: PreMatroid, edge: OrderEdge) -> Failures:
    an = branching_images(m, edge)
    out = []
    for d in an.branching:
        u = structure(m).u[d]
        two = [x for x in edge.omega.sequence if bits.has(u, x)][:2]
        if two != [edge.a, edge.z] or not is_edge_balanced_almost(m, edge, d):
            out.append({"A": m.ground.format(d)})
    return out


def non_branching_balance(m: PreMatroid, edge: OrderEdge) -> Failures:
    """Q, eps(Q) both non-branching: Q balanced iff eps(phi Q) = phi(eps Q) iff eps(Q) balanced."""
    an = branching_images(m, edge)
    phi_w = tables(m, edge.omega).phi
    out = []
    for q in phi_w:
        eq = edge.eps.apply(q)
        if eq not in phi_w or q in an.branching or eq in an.branching:
            continue
        mid = edge.eps.apply(phi_w[q]) == phi_w[eq]
        if not (is_edge_balanced_almost(m, edge, q) == mid == is_edge_balanced_almost(m, edge, eq)):
            out.append({"Q": m.ground.format(q)})
    return out


def non_branching_flip(m: PreMatroid, edge: OrderEdge) -> Failures:
    an = branching_images(m, edge)
    phi_w = tables(m, edge.omega).phi
    out = []
    for q, b in phi_w.items():
        if q in an.branching:
            continue
        d = (b & ~q).bit_length() - 1
        eb = edge.eps.apply(b)
        if eb != b and eb in m.basis_set and d in (edge.a, edge.z):
            out.append({"Q": m.ground.format(q), "d": m.ground.labels[d]})
    return out


def balanced_basis_bijection(m: PreMatroid, edge: OrderEdge) -> Failures:
    t_w, t_p = tables(m, edge.omega), tables(m, edge.pi)
    out = []
    for b in m.bases:
        eb = edge.eps.apply(b)
        w_bal = is_balanced_basis(m, edge, b, Side.OMEGA)
        if eb in m.basis_set and w_bal != is_balanced_basis(m, edge, eb, Side.PI):
            out.append({"check": "omega/pi symmetry", "B": m.ground.format(b)})
        if not w_bal:
            continue
        left, right = t_w.phi_fibres[b], t_p.phi_fibres[eb]
        if {edge.eps.apply(q) for q in left} != set(right) or len(left) != len(right):
            out.append({"check": "bijection", "B": m.ground.format(b)})
    return out


def branching_image_shape(m: PreMatroid, edge: OrderEdge) -> Failures:
    an = branching_images(m, edge)
    out = []
    eps = edge.eps.apply
    for b in an.images:
        eb = eps(b)
        one = bits.has(b, edge.a) != bits.has(b, edge.z)
        if eb not in m.basis_set or eb not in an.images or eb == b or not one:
            out.append({"check": "shape", "B": m.ground.format(b)})
    for b in m.bases:
        if (b in an.images_pi) != (eps(b) in an.images_omega):
            out.append({"check": "pi/omega image", "B": m.ground.format(b)})
    return out


def equal_fibres(m: PreMatroid, edge: OrderEdge) -> Failures:
    an = branching_images(m, edge)
    t_w, t_p = tables(m, edge.omega), tables(m, edge.pi)
    return [
        {"B": m.ground.format(b)}
        for b in m.bases
        if b not in an.images and set(t_w.phi_fibres[b]) != set(t_p.phi_fibres[b])
    ]


EDGE_CHECKS: dict[str, Callable[[PreMatroid, OrderEdge], Failures]] = {
    "branching-balanced": branching_is_balanced,
    "non-branching-balance": non_branching_balance,
    "non-branching-flip": non_branching_flip,
    "balanced-basis-bijection": balanced_basis_bijection,
    "branching-image-shape": branching_image_shape,
    "equal-fibres": equal_fibres,
}


# --- per linking -------------------------------------------------------------


def inverse_linking(link: Linking) -> Failures:
    ok = verify_linking(link).is_linking == verify_linking(link.inverse()).is_linking
    return [] if ok else [{"check": "inverse"}]


def fixed_swap_stays(link: Linking) -> Failures:
    """x in B*, y != x, swapping x,y fixes B: then y in B*."""
    g = link.source.ground
    out = []
    for b, b_star in link.pairs():
        for x in bits.elements(b_star):
            for y in range(g.n):
                if y != x and bits.swap(b, x, y) == b and not bits.has(b_star, y):
                    out.append({"B": g.format(b), "x": g.labels[x], "y": g.labels[y]})
    return out


def identity_or_complement(link: Linking) -> Failures:
    full = link.source.ground.full
    return [{"B": link.source.ground.format(b)} for b, c in link.pairs() if c != b and c != full & ~b]


def transposition_transport(link: Linking) -> Failures:
    """B* = B forces t(B)* = t(B); B* = B^c forces t(B)* = t(B)^c, whenever t(B) is a basis."""
    g = link.source.ground
    full = g.full
    fwd = link.as_dict()
    out = []
    for b, c in link.pairs():
        for x, y in combinations(range(g.n), 2):
            tb = bits.swap(b, x, y)
            if tb not in fwd:
                continue
            if (c == b and fwd[tb] != tb) or (c == full & ~b and fwd[tb] != full & ~tb):
                out.append({"B": g.format(b), "swap": [g.labels[x], g.labels[y]]})
    return out


def basis_chains(link: Linking) -> Failures:
    m = link.source
    out = []
    for b in m.bases:
        for b2 in m.bases:
            steps = basis_path(m, b, b2)
            cur = b
            for st in steps:
                cur = st.swap.apply(cur)
                if cur != st.basis or cur not in m.basis_set:
                    out.append({"from": m.ground.format(b), "to": m.ground.format(b2)})
                    break
            if cur != b2:
                out.append({"from": m.ground.format(b), "to": m.ground.format(b2), "ended": m.ground.format(cur)})
    return out


def xy_lemma(link: Linking) -> Failures:
    src, dst = structure(link.source), structure(link.target)
    g = link.source.ground
    out = []
    for s, us in src.u.items():
        elems = list(bits.elements(us))
        for x in elems:
            for y in elems:
                if x == y:
                    continue
                for a in dst.u:
                    if not check_xy_lemma(link, s, x, y, a):
                        out.append({"S": g.format(s), "x": g.labels[x], "y": g.labels[y], "A": g.format(a)})
    return out


def xy_flip(link: Linking) -> Failures:
    """With D = (S + x)* for x != y in U(S): swapping x, y keeps D a target basis
    and D holds exactly one of x, y."""
    src = structure(link.source)
    g = link.source.ground
    dst = link.target.basis_set
    out = []
    for s, us in src.u.items():
        for x in bits.elements(us):
            d = link.image(s | (1 << x))
            for y in bits.elements(us & ~(1 << x)):
                if bits.swap(d, x, y) not in dst or bits.has(d, x) == bits.has(d, y):
                    out.append({"S": g.format(s), "x": g.labels[x], "y": g.labels[y]})
    return out


LINKING_CHECKS: dict[str, Callable[[Linking], Failures]] = {
    "inverse-linking": inverse_linking,
    "fixed-swap": fixed_swap_stays,
    "identity-or-complement": identity_or_complement,
    "transposition-transport": transposition_transport,
    "basis-chains": basis_chains,
    "xy-lemma": xy_lemma,
    "xy-flip": xy_flip,
}


# --- per edge and linking ------------------------------------------------------


def linked_balance(m: PreMatroid, link: Linking, edge: OrderEdge) -> Failures:
    return check_linked_balance(m, link, edge).failures


def linked_image_balanced(m: PreMatroid, link: Linking, edge: OrderEdge) -> Failures:
    """B* a branching image of the target forces B to be balanced."""
    tgt = branching_images(link.target, edge).images
    return [
        {"B": m.ground.format(b)}
        for b, c in link.pairs()
        if c in tgt and not is_edge_balanced_basis(m, edge, b)
    ]


def linked_image_bijection(m: PreMatroid, link: Linking, edge: OrderEdge) -> Failures:
    src = branching_images(m, edge).images
    tgt = branching_images(link.target, edge).images
    t_w, t_p = tables(m, edge.omega), tables(m, edge.pi)
    out = []
    for b, c in link.pairs():
        if b in src or c in tgt:
            left, right = t_w.phi_fibres[b], t_p.phi_fibres.get(edge.eps.apply(b))
            if right is None or {edge.eps.apply(q) for q in left} != set(right) or len(left) != len(right):
                out.append({"B": m.ground.format(b)})
    return out


def sigma_moves_exactly(m: PreMatroid, link: Linking, edge: OrderEdge) -> Failures:
    src = branching_images(m, edge).images
    tgt = branching_images(link.target, edge).images
    s = sigma(m, link, edge)
    return [
        {"B": m.ground.format(b)}
        for b, c in link.pairs()
        if (s[b] != b) != (b in src or c in tgt)
    ]


def sigma_swaps_pairs(m: PreMatroid, link: Linking, edge: OrderEdge) -> Failures:
    s = sigma(m, link, edge)
    swap = moved(m, link, edge)
    out = []
    for b in m.bases:
        if s[b] != b:
            eb = edge.eps.apply(b)
            if s[b] != eb or eb not in swap or s.get(eb) != b:
                out.append({"B": m.ground.format(b)})
    return out


def sigma_transport(m: PreMatroid, link: Linking, edge: OrderEdge) -> Failures:
    return verify_sigma(m, link, edge, full=True).failures


LINKED_EDGE_CHECKS: dict[str, Callable[[PreMatroid, Linking, OrderEdge], Failures]] = {
    "linked-balance": linked_balance,
    "linked-image-balanced": linked_image_balanced,
    "linked-image-bijection": linked_image_bijection,
    "sigma-moves-exactly": sigma_moves_exactly,
    "sigma-swaps-pairs": sigma_swaps_pairs,
    "sigma-transport": sigma_transport,
}


def directed_edges(n: int) -> Iterable[OrderEdge]:
    """Every edge of the order graph once from each endpoint."""
    for w in all_orders(n):
        seq = w.sequence
        for i in range(n - 1):
            yield OrderEdge.at(w, seq[i], seq[i + 1])


# --- multi-images ----------------------------------------------------------------


def multi_image_composition(max_size: int = 5, values: int = 3) -> Failures:
    """f[S] = (f o g)[S] for every f: S -> {0..values-1} and bijection g of S."""
    out = []
    for n in range(max_size + 1):
        perms = list(permutations(range(n)))
        for f in product(range(values), repeat=n):
            ref = multi_image(f.__getitem__, range(n))
            for g in perms:
                if multi_image(lambda s: f[g[s]], range(n)) != ref:
                    out.append({"f": f, "g": g})
    return out


def polynomial_correspondence(m: PreMatroid, orders: Iterable[LinearOrder]) -> Failures:
    """T as the multi-image of B -> (i, e) evaluates like the sum of x^i y^e over
    bases, and its text form parses back to the same multi-set."""
    out = []
    for w in orders:
        recs = [activities(m, w, b) for b in m.bases]
        poly = BivarMultiSet(multi_image(lambda r: (r.internal, r.external), recs))
        if poly != tutte(m, w) or parse(render(poly)) != poly:
            out.append({"order": w.format(m.ground), "check": "multi-image"})
            continue
        for x, y in ((1, 1), (2, 1), (1, 2), (2, 3), (-1, 2)):
            if evaluate(poly, x, y) != sum(x**r.internal * y**r.external for r in recs):
                out.append({"order": w.format(m.ground), "point": (x, y)})
    return out


# --- sweeping ----------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    scope: str  # matroid | orders | edge | linking | linked-edge | global
    fn: Callable


def _registry() -> dict[str, Check]:
    reg = {}
    for scope, table in (
        ("matroid", MATROID_CHECKS),
        ("edge", EDGE_CHECKS),
        ("linking", LINKING_CHECKS),
        ("linked-edge", LINKED_EDGE_CHECKS),
    ):
        for name, fn in table.items():
            reg[name] = Check(name, scope, fn)
    for name, fn in (
        ("duality-maps", duality_maps),
        ("fibre-partition", fibre_partition),
        ("polynomial-correspondence", polynomial_correspondence),
    ):
        reg[name] = Check(name, "orders", fn)
    reg["multi-image-composition"] = Check("multi-image-composition", "global", multi_image_composition)
    return reg


CHECKS: dict[str, Check] = _registry()


def run_check(name: str, entries) -> tuple[int, Failures]:
    """Run one named check over corpus entries; returns (instances, failures).

    Every edge of the order graph is visited once from each endpoint and both
    canonical linkings are used where a linking is needed.
    """
    check = CHECKS[name]
    if check.scope == "global":
        return 1, check.fn()
    count, out = 0, []
    for entry in entries:
        m = entry.matroid
        if check.scope == "matroid":
            calls = [(m,)]
        elif check.scope == "orders":
            calls = [(m, list(all_orders(m.n)))]
        elif check.scope == "linking":
            calls = [(link,) for link in (identity_linking(m), complement_linking(m))]
        elif check.scope == "edge":
            calls = [(m, e) for e in directed_edges(m.n)]
        else:
            links = (identity_linking(m), complement_linking(m))
            calls = [(m, link, e) for e in directed_edges(m.n) for link in links]
        for args in calls:
            count += 1
            out.extend({"matroid": entry.name, **f} for f in check.fn(*args))
    return count, out
