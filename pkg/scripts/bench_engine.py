#!/usr/bin/env python3
"""Timing runs for the exact engine at increasing rank.

Reports wall time for generator construction, pairwise commutators, and the
leading-term verification, one line per (task, N).
"""
import sys
import time

from qgt.dck import verify_lt_theorem
from qgt.engine import UqEngine
from qgt.gtsub import commute_check, d_gen, dgen_pairs


def timed(label, fn):
    t0 = time.time()
    fn()
    print("%-32s %8.1f ms" % (label, (time.time() - t0) * 1000))


def main():
    nmax = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for n in range(2, nmax + 1):
        eng = UqEngine(n)
        timed("d-generators N=%d" % n, lambda: [d_gen(eng, r, s) for r, s in dgen_pairs(n)])
        timed("commutators N=%d" % n, lambda: commute_check(eng))
        timed("leading terms N=%d" % n, lambda: verify_lt_theorem(eng))
    return 0


if __name__ == "__main__":
    sys.exit(main())
