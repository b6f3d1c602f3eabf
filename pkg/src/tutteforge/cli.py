"""Command-line interface.

Exit codes: 0 when every checked property holds, 1 when one is violated (a
counterexample is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import __version__
from .activities import tutte, tutte_linking
from .balance import check_linked_balance, verify_sigma
from .errors import TutteForgeError
from .formats import dumps, load_document, load_input, matroid_to_json
from .linkings import (
    Linking,
    LinkingKind,
    classify_linking,
    complement_linking,
    identity_linking,
    linking_from_labels,
    verified,
    verify_linking,
)
from .matroid import GroundSet, PreMatroid, check_exchange, dual, is_matroid
from .oracle import tutte_corank_nullity, tutte_deletion_contraction
from .orders import LinearOrder, all_orders, edges_at, path_between
from .rng import XorShift64Star

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
SUITES = ("exchange", "independence", "linkings", "sigma")


class UsageError(TutteForgeError):
    pass


@dataclass
class RunReport:
    command: list
    status: str = "pass"  # pass | fail | error
    counterexample: Optional[dict] = None
    suites: dict = field(default_factory=dict)
    message: Optional[str] = None
    timing_ms: Optional[int] = None

    def to_json(self) -> dict:
        doc = {"command": self.command, "status": self.status, "counterexample": self.counterexample}
        if self.suites:
            doc["suites"] = self.suites
        if self.message is not None:
            doc["message"] = self.message
        if self.timing_ms is not None:
            doc["timing_ms"] = self.timing_ms
        return doc

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_OK, "fail": EXIT_FAIL}.get(self.status, EXIT_ERROR)


# --- order selection ---------------------------------------------------------


def parse_orders(spec: str) -> tuple[str, int]:
    if spec == "all":
        return "all", 0
    kind, _, count = spec.partition(":")
    if kind != "random" or not count.isdigit() or int(count) < 1:
        raise UsageError(f"--orders must be 'all' or 'random:N', got {spec!r}")
    return "random", int(count)


def select_orders(n: int, spec: str, seed: int) -> list[LinearOrder]:
    """All orders, or N seeded shuffles of the natural order (repeats allowed)."""
    kind, count = parse_orders(spec)
    if kind == "all":
        return list(all_orders(n))
    rng = XorShift64Star(seed)
    out = []
    for _ in range(count):
        seq = list(range(n))
        rng.shuffle(seq)
        out.append(LinearOrder.from_sequence(seq))
    return out


# --- verification suites ----------------------------------------------------------


def _suite_exchange(m: PreMatroid, orders, args) -> tuple[int, Optional[dict]]:
    r = check_exchange(m)
    return len(m.bases), (None if r.holds else {"property": "exchange", "witness": r.describe(m.ground)})


def _suite_independence(m: PreMatroid, orders, args) -> tuple[int, Optional[dict]]:
    g = m.ground
    ref_order = LinearOrder.natural(m.n)
    ref = tutte(m, ref_order)
    checked = 0
    for w in orders:
        checked += 1
        p = tutte(m, w)
        if p != ref:
            return checked, {
                "property": "order-independence",
                "orders": [ref_order.format(g), w.format(g)],
                "polynomials": [str(ref), str(p)],
            }
    if is_matroid(m):
        checked += 1
        oracle = tutte_corank_nullity(m)
        if oracle != ref:
            return checked, {"property": "corank-nullity", "activity": str(ref), "oracle": str(oracle)}
    return checked, None


def _canonical_links(m: PreMatroid) -> list[tuple[str, Linking]]:
    return [("identity", identity_linking(m)), ("complement", complement_linking(m))]


def _suite_linkings(m: PreMatroid, orders, args) -> tuple[int, Optional[dict]]:
    """Classification of both canonical linkings, order-independence of their
    polynomials, and the complement linking reproducing the Tutte polynomial."""
    g = m.ground
    natural = LinearOrder.natural(m.n)
    checked = 0
    for name, link in _canonical_links(m):
        checked += 1
        kind = classify_linking(link)
        if kind.value.lower() != name:
            return checked, {"property": "classification", "linking": name, "got": kind.value}
        ref = tutte_linking(link, natural)
        for w in orders:
            checked += 1
            p = tutte_linking(link, w)
            if p != ref:
                return checked, {"property": "linking-order-independence", "linking": name,
                                 "orders": [natural.format(g), w.format(g)], "polynomials": [str(ref), str(p)]}
            if name == "complement" and p != tutte(m, w):
                return checked, {"property": "complement-is-tutte", "order": w.format(g)}
    return checked, None


def _parse_edge(m: PreMatroid, text: str) -> tuple[int, int]:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2:
        raise UsageError("--edge takes two labels 'a,z'")
    a, z = (m.ground.index(p) for p in parts)
    if a == z:
        raise UsageError("--edge needs two distinct elements")
    return a, z


def _suite_sigma(m: PreMatroid, orders, args) -> tuple[int, Optional[dict]]:
    pair = _parse_edge(m, args.edge) if args.edge else None
    checked = 0
    for name, link in _canonical_links(m):
        for w in orders:
            for edge in edges_at(w):
                if pair and {edge.a, edge.z} != set(pair):
                    continue
                checked += 1
                r = verify_sigma(m, link, edge, full=args.full)
                if not r.ok:
                    return checked, {"property": "sigma", "linking": name, "failures": r.failures}
                r = check_linked_balance(m, link, edge)
                if not r.ok:
                    return checked, {"property": "linked-balance", "linking": name, "failures": r.failures}
    return checked, None


SUITE_RUNNERS: dict[str, Callable] = {
    "exchange": _suite_exchange,
    "independence": _suite_independence,
    "linkings": _suite_linkings,
    "sigma": _suite_sigma,
}
NEEDS_MATROID = {"linkings", "sigma"}


def run_verify(m: PreMatroid, args) -> RunReport:
    report = RunReport(command=list(args.argv))
    orders = select_orders(m.n, args.orders, args.seed)
    names = SUITES if args.suite == "all" else (args.suite,)
    matroid = is_matroid(m)
    for name in names:
        if name in NEEDS_MATROID and not matroid:
            if args.suite == name:
                raise UsageError(f"suite {name} needs a matroid; the exchange property fails")
            report.suites[name] = {"status": "skipped", "checked": 0}
            continue
        checked, cex = SUITE_RUNNERS[name](m, orders, args)
        report.suites[name] = {"status": "fail" if cex else "pass", "checked": checked}
        if cex and report.counterexample is None:
            report.status = "fail"
            report.counterexample = {"suite": name, **cex}
    return report


# --- commands -------------------------------------------------------------------


def _emit(doc_or_text, as_json: bool) -> None:
    print(dumps(doc_or_text) if as_json else doc_or_text)


def cmd_tutte(args) -> int:
    m, g = load_input(args.input)
    if args.method == "delcon":
        if g is None:
            raise UsageError("--method delcon needs a graph input")
        poly = tutte_deletion_contraction(g)
    elif args.method == "corank":
        poly = tutte_corank_nullity(m)
    else:
        w = LinearOrder.parse(m.ground, args.order) if args.order else LinearOrder.natural(m.n)
        poly = tutte(m, w)
    if args.json:
        _emit({"polynomial": str(poly), **poly.to_json()}, True)
    else:
        print(poly)
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    try:
        m, _ = load_input(args.input)
        report = run_verify(m, args)
    except TutteForgeError as e:
        report = RunReport(command=list(args.argv), status="error", message=str(e))
    if args.timing:
        report.timing_ms = round((time.perf_counter() - start) * 1000)
    if args.json:
        _emit(report.to_json(), True)
    else:
        print(f"status: {report.status}")
        for name, s in report.suites.items():
            print(f"  {name}: {s['status']} ({s['checked']} checked)")
        if report.counterexample:
            print("counterexample: " + dumps(report.counterexample))
        if report.message:
            print(f"error: {report.message}", file=sys.stderr)
        if report.timing_ms is not None:
            print(f"time: {report.timing_ms} ms")
    return report.exit_code


def cmd_dual(args) -> int:
    m, _ = load_input(args.input)
    print(dumps(matroid_to_json(dual(m))))
    return EXIT_OK


def cmd_orders_path(args) -> int:
    g = GroundSet.range(args.n)
    start = LinearOrder.parse(g, getattr(args, "from"))
    end = LinearOrder.parse(g, args.to)
    steps = path_between(start, end)
    if args.json:
        _emit({"length": len(steps), "steps": [e.to_json(g) for e in steps]}, True)
    else:
        for e in steps:
            print(f"{e.omega.format(g)} -> {e.pi.format(g)}  swap {g.labels[e.a]},{g.labels[e.z]}")
        print(f"length: {len(steps)}")
    return EXIT_OK


def cmd_linking_classify(args) -> int:
    src, _ = load_input(args.source)
    dst, _ = load_input(args.target)
    if args.map == "identity":
        link = Linking.from_pairs(src, dst, {b: b for b in src.bases})
    elif args.map == "complement":
        full = src.ground.full
        link = Linking.from_pairs(src, dst, {b: full & ~b for b in src.bases})
    else:
        mapping = load_document(args.map)
        if isinstance(mapping, dict) and isinstance(mapping.get("map"), dict):
            mapping = mapping["map"]
        if not isinstance(mapping, dict):
            raise UsageError("a linking map file holds an object {\"1,2\": \"3\", ...}")
        link = linking_from_labels(src, dst, mapping)
    report = verify_linking(link)
    g = src.ground
    if not report.is_linking:
        v = report.violated
        doc = {
            "status": "fail",
            "condition": v.condition,
            "basis": g.labels_of(v.basis),
            "swap": [g.labels[v.transposition.a], g.labels[v.transposition.z]],
        }
        _emit(doc if args.json else f"not a linking: {v.condition} fails at {g.format(v.basis)} "
              f"for the swap {g.labels[v.transposition.a]},{g.labels[v.transposition.z]}", args.json)
        return EXIT_FAIL
    try:
        kind: LinkingKind = classify_linking(verified(link))
    except TutteForgeError as e:
        _emit({"status": "fail", "message": str(e)} if args.json else f"unclassified: {e}", args.json)
        return EXIT_FAIL
    _emit({"status": "pass", "kind": kind.value} if args.json else kind.value, args.json)
    return EXIT_OK


# --- parser ------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tutteforge", description="Tutte polynomials of matroids via basis activities.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("tutte", help="print the Tutte polynomial")
    t.add_argument("input", help="matroid or graph JSON file")
    t.add_argument("--order", help="comma-separated labels, smallest first (default: ground order)")
    t.add_argument("--method", choices=("activity", "corank", "delcon"), default="activity")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tutte)

    v = sub.add_parser("verify", help="run verification suites and print a report")
    v.add_argument("input")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--orders", default="all", help="'all' or 'random:N'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--edge", help="restrict the sigma suite to swaps of 'a,z'")
    v.add_argument("--full", action="store_true", help="collect every sigma failure, not just the first")
    v.add_argument("--timing", action="store_true", help="include wall time (makes output nondeterministic)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dual", help="print the dual as matroid JSON")
    d.add_argument("input")
    d.set_defaults(func=cmd_dual)

    o = sub.add_parser("orders-path", help="adjacent-swap path between two orders of 1..n")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--from", required=True)
    o.add_argument("--to", required=True)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_orders_path)

    lc = sub.add_parser("linking-classify", help="check a basis bijection and classify it")
    lc.add_argument("source")
    lc.add_argument("target")
    lc.add_argument("--map", required=True, help="'identity', 'complement', or a JSON file of label maps")
    lc.add_argument("--json", action="store_true")
    lc.set_defaults(func=cmd_linking_classify)
    return p


def main(argv: Optional[list] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except (TutteForgeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
