"""Acceptance criteria, one test each.  Every test prints a single line

    PASS [n] <summary>   or   FAIL [n] <summary>

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines, or execute
this file directly to get only the eight lines.
"""

from __future__ import annotations

import json
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

from tutteforge.activities import activities, tutte
from tutteforge.constructors import Graph
from tutteforge.corpus import corpus
from tutteforge.formats import graph_to_json, matroid_to_json
from tutteforge.linkings import classification_search, complement_linking, identity_linking
from tutteforge.matroid import GroundSet, PreMatroid, check_exchange, check_symmetric_exchange, dual
from tutteforge.oracle import tutte_corank_nullity, tutte_deletion_contraction
from tutteforge.orders import all_orders
from tutteforge.properties import CHECKS, directed_edges, run_check
from tutteforge.balance import verify_sigma

ORDER_BUDGET_S = 60.0
CLASSIFY_BUDGET_S = 120.0


def report(number: int, ok: bool, summary: str, sink: list | None = None) -> None:
    line = f"{'PASS' if ok else 'FAIL'} [{number}] {summary}"
    print(line, flush=True)
    if sink is not None:
        sink.append(line)


def criterion_1() -> tuple[bool, str]:
    start = time.perf_counter()
    bad, orders_seen = [], 0
    for e in corpus():
        ws = list(all_orders(e.matroid.n))
        orders_seen += len(ws)
        first = tutte(e.matroid, ws[0])
        if any(tutte(e.matroid, w) != first for w in ws[1:]):
            bad.append(e.name)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < ORDER_BUDGET_S
    return ok, (f"order independence: {len(corpus())} matroids, {orders_seen} (matroid, order) pairs, "
                f"{len(bad)} mismatches, {elapsed:.1f}s (limit {ORDER_BUDGET_S:.0f}s)")


def criterion_2() -> tuple[bool, str]:
    bad = []
    graphic = 0
    for e in corpus():
        m = e.matroid
        t = tutte(m, next(iter(all_orders(m.n))))
        if t != tutte_corank_nullity(m) or t.evaluate(1, 1) != len(m.bases):
            bad.append(e.name)
        if e.graph is not None:
            graphic += 1
            if tutte_deletion_contraction(e.graph) != t:
                bad.append(e.name + " (delcon)")
    k3 = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
    k3_ok = str(tutte_deletion_contraction(k3)) == "x^2 + x + y"
    return not bad and k3_ok, (f"oracles agree on {len(corpus())} matroids ({graphic} via deletion-contraction), "
                               f"K3 -> x^2 + x + y: {k3_ok}, mismatches {bad[:3]}")


def criterion_3() -> tuple[bool, str]:
    bad = [e.name for e in corpus() if not check_symmetric_exchange(e.matroid).holds]
    g = GroundSet.range(4)
    blocks = PreMatroid(g, (g.mask("12"), g.mask("34")))
    r = check_exchange(blocks)
    witness = r.describe(g)
    ok = not bad and witness == {"B1": ["1", "2"], "B2": ["3", "4"], "x": "1"}
    return ok, f"symmetric exchange on {len(corpus())} matroids, {len(bad)} failures; {{{{1,2}},{{3,4}}}} witness {witness}"


def criterion_4() -> tuple[bool, str]:
    bad = []
    pairs = 0
    for e in corpus():
        m = e.matroid
        d = dual(m)
        full = m.ground.full
        if dual(d) != m or not check_exchange(d).holds:
            bad.append(e.name)
            continue
        orders = list(all_orders(m.n)) if m.n <= 4 else [next(iter(all_orders(m.n)))]
        for w in orders:
            if tutte(d, w) != tutte(m, w).swapped():
                bad.append(f"{e.name} swap")
            if m.n <= 4:
                for b in m.bases:
                    pairs += 1
                    if activities(m, w, b).external != activities(d, w, full & ~b).internal:
                        bad.append(f"{e.name} activity")
    return not bad, f"duality on {len(corpus())} matroids, {pairs} (basis, order) activity pairs at n <= 4, failures {bad[:3]}"


def criterion_5() -> tuple[bool, str]:
    start = time.perf_counter()
    s = classification_search(max_n=3, max_bases=4)
    elapsed = time.perf_counter() - start
    ok = not s.failures and s.matroid_linkings == s.identity + s.complement and elapsed < CLASSIFY_BUDGET_S
    return ok, (f"classification: {s.bijections} bijections, {s.linkings} linkings, {s.matroid_linkings} between matroids "
                f"({s.identity} identity, {s.complement} complement), {len(s.failures)} unclassified, "
                f"{s.other_linkings} with a non-matroid end, {elapsed:.1f}s (limit {CLASSIFY_BUDGET_S:.0f}s)")


def criterion_6() -> tuple[bool, str]:
    calls, bad = 0, []
    for e in corpus():
        m = e.matroid
        links = (identity_linking(m), complement_linking(m))
        for edge in directed_edges(m.n):
            for link in links:
                calls += 1
                r = verify_sigma(m, link, edge, full=True)
                if not r.ok:
                    bad.append((e.name, r.failures[0]))
    return not bad, f"sigma: {calls} (matroid, edge side, linking) checks, {len(bad)} failing, first {bad[:1]}"


# each statement of the lemma suite and the check exercising it
LEMMA_SUITE = {
    "no basis inside another": "antichain",
    "greedy extension J <= B <= S": "max-over-extension",
    "C(Q) is the unique circuit in Q": "over-basis-circuit",
    "blocked union holds no basis": "blocked-union-no-basis",
    "circuit extension holds no basis": "circuit-extension-no-basis",
    "|U(A) & C(Q)| != 1": "u-c-intersection",
    "non-triangle U sets agree": "non-triangle",
    "triangle U sets cover": "triangle",
    "branching almost-bases are balanced": "branching-balanced",
    "non-branching balance transfers": "non-branching-balance",
    "non-branching flip avoids a, z": "non-branching-flip",
    "balanced basis fibre bijection": "balanced-basis-bijection",
    "branching image shape": "branching-image-shape",
    "equal fibres off branching images": "equal-fibres",
    "linked balance": "linked-balance",
    "linked branching image is balanced": "linked-image-balanced",
    "linked branching image fibre bijection": "linked-image-bijection",
    "tau-fixed bases stay in B*": "fixed-swap",
    "B* is B or its complement": "identity-or-complement",
    "transpositions transport the shape": "transposition-transport",
    "bases are chained by transpositions": "basis-chains",
    "multi-image composition": "multi-image-composition",
    "polynomial of a multi-image": "polynomial-correspondence",
}


def criterion_7() -> tuple[bool, str]:
    missing = [c for c in LEMMA_SUITE.values() if c not in CHECKS]
    failing, instances = [], 0
    for name in CHECKS:
        count, failures = run_check(name, corpus())
        instances += count
        if failures or count == 0:
            failing.append(name)
    ok = not missing and not failing
    return ok, (f"lemma suite: {len(CHECKS)} checks ({len(LEMMA_SUITE)} named statements), {instances} instances, "
                f"failing {failing}, missing {missing}")


def _cli(*argv: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "tutteforge", *argv], capture_output=True)


def criterion_8() -> tuple[bool, str]:
    entries = {e.name: e for e in corpus()}
    with tempfile.TemporaryDirectory() as tmp:
        d = Path(tmp)
        inputs = {
            "u23.json": matroid_to_json(entries["U(2,3)"].matroid),
            "gf2.json": matroid_to_json(entries["GF2[0]"].matroid),
            "k4.json": graph_to_json(Graph.from_pairs(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])),
            "blocks.json": {"ground": ["1", "2", "3", "4"], "bases": [["1", "2"], ["3", "4"]]},
        }
        for name, doc in inputs.items():
            (d / name).write_text(json.dumps(doc))
        (d / "broken.json").write_text("{")
        args = ("--suite", "all", "--orders", "random:50", "--seed", "7")
        identical, codes = True, {}
        for name in (*inputs, "broken.json"):
            for extra in ((), ("--json",)):
                runs = [_cli("verify", str(d / name), *args, *extra) for _ in range(2)]
                identical &= runs[0].stdout == runs[1].stdout and runs[0].returncode == runs[1].returncode
                codes[name] = runs[0].returncode
        usage = _cli("verify").returncode
    expected = {"u23.json": 0, "gf2.json": 0, "k4.json": 0, "blocks.json": 1, "broken.json": 2}
    ok = identical and codes == expected and usage == 2
    return ok, f"CLI determinism: byte-identical {identical}, exit codes {codes}, usage error {usage}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.fixture
def run(pytestconfig):
    # lines are repeated in the terminal summary, so they show even without -s
    sink = pytestconfig.__dict__.setdefault("acceptance_lines", [])

    def _run(number: int) -> None:
        ok, summary = CRITERIA[number - 1]()
        report(number, ok, summary, sink)
        assert ok, summary

    return _run


def test_criterion_1_order_independence(run):
    run(1)


def test_criterion_2_oracle_equivalence(run):
    run(2)


def test_criterion_3_symmetric_exchange(run):
    run(3)


def test_criterion_4_duality(run):
    run(4)


def test_criterion_5_linking_classification(run):
    run(5)


def test_criterion_6_sigma(run):
    run(6)


def test_criterion_7_lemma_suite(run):
    run(7)


def test_criterion_8_cli_determinism(run):
    run(8)


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        ok, summary = fn()
        report(i, ok, summary)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
