#!/usr/bin/env python3
"""Peak live pairs of the two-layer engine against its block-scheme bound."""

import argparse
import math

from semidyn.bench import space_run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-exp", type=int, default=6, help="window sizes 10^3 .. 10^max-exp")
    ap.add_argument("--fixed", action="store_true", help="also run fixed:c for c = sqrt(l)/4, sqrt(l), 4 sqrt(l)")
    args = ap.parse_args(argv)

    print(f"{'l':>8} {'scheme':>12} {'text':>9} {'slide':>6} {'oscil':>6} {'bound':>7}")
    for e in range(3, args.max_exp + 1):
        l = 10 ** e
        c = math.isqrt(l)
        schemes = [("progressing", 8 * math.sqrt(l) + 8)]
        if args.fixed:
            schemes += [(f"fixed:{cc}", 4 * (cc + l / cc) + 8) for cc in (c // 4, c, 4 * c)]
        for scheme, bound in schemes:
            for text in ("random", "constant"):
                r = space_run(l, scheme, text)
                flag = "" if max(r.slide_peak, r.oscillating_peak) <= bound else "  OVER"
                print(f"{l:>8} {scheme:>12} {text:>9} {r.slide_peak:>6} {r.oscillating_peak:>6} {bound:>7.0f}{flag}")


if __name__ == "__main__":
    main()
