#!/usr/bin/env python3
"""Run the twelve acceptance criteria and print one verdict line each.

Exits 0 only if every criterion passes.  Failures are printed with their
reason and do not stop the remaining criteria from running.
"""

import sys
import time

from ylab.acceptance import ALL_CRITERIA


def main() -> int:
    started = time.perf_counter()
    failures = 0
    for fn in ALL_CRITERIA:
        try:
            print(fn().line(), flush=True)
        except Exception as exc:
            failures += 1
            number = fn.__name__.rsplit("_", 1)[-1]
            print(f"criterion {int(number):2d}: FAIL ({exc})", flush=True)
    total = time.perf_counter() - started
    verdict = "all passed" if failures == 0 else f"{failures} FAILED"
    print(f"-- {len(ALL_CRITERIA)} criteria, {verdict}, {total:.1f}s total")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
