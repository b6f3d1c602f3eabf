"""Exhaustively search small basis families for linkings and classify them."""

import argparse
import time

from tutteforge.linkings import classification_search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--max-bases", type=int, default=4)
    args = ap.parse_args()
    start = time.perf_counter()
    s = classification_search(max_n=args.max_n, max_bases=args.max_bases)
    print(f"bijections tried      {s.bijections}")
    print(f"linkings              {s.linkings}")
    print(f"  between matroids    {s.matroid_linkings} ({s.identity} identity, {s.complement} complement)")
    print(f"  non-matroid end     {s.other_linkings}")
    print(f"unclassified          {len(s.failures)}")
    for f in s.failures[:5]:
        print("    ", f)
    print(f"elapsed               {time.perf_counter() - start:.2f}s")
    return 1 if s.failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
