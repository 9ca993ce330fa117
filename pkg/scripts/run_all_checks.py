#!/usr/bin/env python3
"""Run every verification verb once and print a one-line summary per check.

Exits nonzero if any check fails.  This is the quick interactive version of
the test suite's acceptance gate.
"""
import contextlib
import io
import sys
import time

from qgt.cli import main as cli_main

CHECKS = [
    ["verify-lt", "--n", "4"],
    ["commute", "--n", "4"],
    ["hc", "--n", "4"],
    ["embed-check", "--n", "3"],
    ["invariance", "--n", "3", "--bound", "100"],
    ["maxcomm-cert", "--bound", "1"],
    ["maxcomm-cert", "--bound", "2"],
    ["gl2-fiber", "--bound", "20"],
]


def main():
    failed = 0
    for argv in CHECKS:
        label = " ".join(argv)
        t0 = time.time()
        with contextlib.redirect_stdout(io.StringIO()):
            code = cli_main(argv + ["--json"])
        ms = int((time.time() - t0) * 1000)
        status = "PASS" if code == 0 else "FAIL"
        print("%-40s %s (%d ms)" % (label, status, ms))
        failed += code != 0
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
