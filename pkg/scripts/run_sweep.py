"""Run every registered property check over the corpus and print a table."""

import argparse
import time

from tutteforge.corpus import corpus, small_corpus
from tutteforge.properties import CHECKS, run_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5, help="largest ground set to include")
    ap.add_argument("--check", action="append", help="restrict to a check (repeatable)")
    args = ap.parse_args()
    entries = corpus() if args.max_n >= 5 else small_corpus(args.max_n)
    names = args.check or list(CHECKS)
    total_fail = 0
    for name in names:
        start = time.perf_counter()
        count, failures = run_check(name, entries)
        total_fail += len(failures)
        print(f"{name:28s} {CHECKS[name].scope:12s} {count:8d} instances {len(failures):4d} failures "
              f"{time.perf_counter() - start:6.2f}s")
        for f in failures[:3]:
            print("    ", f)
    print(f"{len(entries)} matroids, {total_fail} failures")
    return 1 if total_fail else 0


if __name__ == "__main__":
    raise SystemExit(main())
