"""Count basis families whose activity polynomial changes with the order.

Matroids never do; this shows how often non-matroids do."""

import argparse
from itertools import combinations

from tutteforge.activities import tutte
from tutteforge.matroid import GroundSet, PreMatroid, is_matroid
from tutteforge.orders import all_orders


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--max-bases", type=int, default=5)
    ap.add_argument("--equal-size", action="store_true", help="only families whose sets share one size")
    args = ap.parse_args()
    g = GroundSet.range(args.n)
    orders = list(all_orders(args.n))
    subsets = range(1 << args.n)
    if args.equal_size:
        groups = {}
        for s in subsets:
            groups.setdefault(bin(s).count("1"), []).append(s)
        pools = list(groups.values())
    else:
        pools = [list(subsets)]
    seen = dependent = matroid_dependent = 0
    example = None
    for pool in pools:
        for k in range(1, args.max_bases + 1):
            for fam in combinations(pool, k):
                m = PreMatroid(g, fam)
                seen += 1
                polys = {tutte(m, w) for w in orders}
                if len(polys) > 1:
                    dependent += 1
                    matroid_dependent += is_matroid(m)
                    example = example or (m.label_family(), len(polys))
    print(f"n={args.n}, families with <= {args.max_bases} bases: {seen}")
    print(f"order-dependent: {dependent} (matroids among them: {matroid_dependent})")
    if example:
        print(f"example {example[0]} has {example[1]} distinct polynomials")


if __name__ == "__main__":
    main()
