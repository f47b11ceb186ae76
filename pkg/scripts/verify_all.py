#!/usr/bin/env python3
"""Long randomized cross-check of every engine, scanner and trie DFS against the oracles.

Exit status 2 on any mismatch or witness violation.
"""

import argparse
import sys
import time

from semidyn.verify import run_suites


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cases", type=int, default=1000)
    ap.add_argument("--max-len", type=int, default=10_000)
    ap.add_argument("--engines", default="heap,deque,two-stack,two-layer,two-layer/fixed:3")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    rep = run_suites(args.seed, engine_cases=args.cases, scan_cases=args.cases // 5, trie_cases=args.cases // 10,
                     max_len=args.max_len, engines=args.engines.split(","))
    print(f"{rep.passed} passed, {len(rep.failed)} failed, {rep.witness_violations} witness violations, "
          f"{time.perf_counter() - t0:.1f}s")
    for r in rep.failed:
        print(f"MISMATCH {r.suite} seed={r.seed} {r.engine}: {r.detail}")
    return 2 if rep.failed or rep.witness_violations else 0


if __name__ == "__main__":
    sys.exit(main())
