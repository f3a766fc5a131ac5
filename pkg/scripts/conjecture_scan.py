"""Exhaustive small-graph scan plus optional random trials, with a short summary.

Usage: python scripts/conjecture_scan.py --max-n 7 --random-trials 200 --out scan.json
"""

import argparse
import json

from induced_matching.scan import scan_exhaustive, scan_random


def summarize(label, result):
    print(f"{label}: checked {result.checked}, hold {result.holds}, tight {len(result.tight)}, "
          f"exceptions {[c['status'] for c in result.exceptions]}, "
          f"violators {len(result.violators)}, inconclusive {len(result.inconclusive)}")
    by_n = {}
    for c in result.tight:
        by_n[c["n"]] = by_n.get(c["n"], 0) + 1
    print(f"  tight graphs by n: {dict(sorted(by_n.items()))}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--random-trials", type=int, default=0)
    ap.add_argument("--random-n", default="8..10")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    results = {"exhaustive": scan_exhaustive(args.max_n)}
    if args.random_trials:
        lo, _, hi = args.random_n.partition("..")
        results["random"] = scan_random(args.random_trials, int(lo), int(hi or lo), args.seed)
    for label, r in results.items():
        summarize(label, r)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({k: r.to_dict() for k, r in results.items()}, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
