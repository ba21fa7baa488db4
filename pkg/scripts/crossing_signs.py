#!/usr/bin/env python3
"""Survey the complement-conjugation signs over the mixed-sign battery.

For every battery module with at least one negative row degree, rebuild the
rational operator from the polynomial one on the flipped module and tabulate
the observed scalar alongside the flip-count statistics.  The table makes
two facts visible that a handful of spot checks would miss: the composite
scalar is the product of the two distinguished-vector flip signs, and for
even column count it is always +1 (the odd-column crossings that produce
-1 cancel between the forward and reversed flips only when n is even).

Usage: python scripts/crossing_signs.py [--limit N] [--only-negative]
"""

import argparse
from collections import Counter

from ylab.battery import mixed_battery
from ylab.duality import composite_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=None,
                        help="survey only the first N battery modules")
    parser.add_argument("--only-negative", action="store_true",
                        help="print only rows with composite sign -1")
    args = parser.parse_args()

    battery = mixed_battery()
    if args.limit is not None:
        battery = battery[:args.limit]

    header = (f"{'n':>2} {'nu':>14} {'mu':>20} "
              f"{'K':>3} {'L':>3} {'M':>3} {'fwd':>4} {'rev':>4} {'sign':>5}")
    print(header)
    print("-" * len(header))
    by_parity = Counter()
    for spec in battery:
        report = composite_check(spec)
        sign = report.composite_sign
        by_parity[(spec.n % 2, sign)] += 1
        if args.only_negative and sign != -1:
            continue
        c = report.counters
        mu_str = ",".join(str(z) for z in spec.mu)
        nu_str = ",".join(str(d) for d in spec.nu)
        print(f"{spec.n:>2} {nu_str:>14} {mu_str:>20} "
              f"{c.K:>3} {c.L:>3} {c.M:>3} "
              f"{report.forward_hv_sign:>4} {report.reversed_hv_sign:>4} "
              f"{sign:>5}")

    print()
    for (parity, sign), count in sorted(by_parity.items()):
        kind = "even" if parity == 0 else "odd"
        print(f"n {kind:>4}, sign {sign:+d}: {count} modules")
    if by_parity[(0, -1)]:
        print("unexpected: an even-n module with composite sign -1")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
