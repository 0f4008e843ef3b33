"""Sweep the relation catalog: typing at a bound, then depth-1 rewrite equality.

    python scripts/relation_sweep.py [--bound 2] [--search-bound 1] [--report sweep.tsv]
"""
import argparse
import time
from collections import Counter

from twotangles.cells import drop_identities
from twotangles.relations import all_instances, check_typing
from twotangles.rewrite import decide_equal, replay


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=2)
    ap.add_argument("--search-bound", type=int, default=1)
    ap.add_argument("--report")
    args = ap.parse_args()

    t = time.perf_counter()
    insts = list(all_instances(args.bound))
    bad = [r for r in insts if not check_typing(r)]
    per_id = Counter(r.id for r in insts)
    print(f"typing: {len(insts)} instances at indices <= {args.bound}, {len(bad)} failures, "
          f"{time.perf_counter() - t:.1f}s")
    print("  per relation: " + " ".join(f"{k}:{per_id[k]}" for k in sorted(per_id)))

    rows = []
    t = time.perf_counter()
    for r in all_instances(args.search_bound):
        v = decide_equal(r.lhs, r.rhs, depth=1)
        ok = bool(v) and replay(r.lhs, v.path) == drop_identities(r.rhs)
        rows.append((r.id, r.param_text, r.variant_text, "Equal" if ok else "Unknown"))
    misses = [row for row in rows if row[3] != "Equal"]
    print(f"search: {len(rows) - len(misses)}/{len(rows)} Equal at depth 1, {time.perf_counter() - t:.1f}s")
    for row in misses:
        print("  unknown: " + "\t".join(map(str, row)))
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for row in rows:
                fh.write("\t".join(map(str, row)) + "\n")


if __name__ == "__main__":
    main()
