#!/usr/bin/env python3
"""Sweep the quantum sl2 simple modules V_l and print both indicators.

The untwisted value alternates with the parity of 2l and the twisted one
is constantly +1; this script mostly exists to watch the exact-arithmetic
cost grow with the dimension.

    python3 scripts/qsl2_sweep.py            # 2l = 0..8
    python3 scripts/qsl2_sweep.py --to 12    # push further (slower)
    python3 scripts/qsl2_sweep.py --forms    # include the canonical forms
"""

import argparse
import time

from fsind.qsl2 import qsl2_indicator
from fsind.scalars import scalar_to_string


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--to", type=int, default=8, metavar="N",
                    help="largest 2l to compute (default 8)")
    ap.add_argument("--forms", action="store_true",
                    help="print the canonical invariant form of each case")
    args = ap.parse_args()

    print("%4s %4s %10s %10s %8s" % ("2l", "dim", "nu", "nu^tau", "time"))
    total = time.perf_counter()
    for two_ell in range(args.to + 1):
        t0 = time.perf_counter()
        plain = qsl2_indicator(two_ell, max_two_ell=args.to)
        twisted = qsl2_indicator(two_ell, twisted=True, max_two_ell=args.to)
        dt = time.perf_counter() - t0
        print("%4d %4d %10s %10s %7.2fs" % (
            two_ell, two_ell + 1, scalar_to_string(plain.nu),
            scalar_to_string(twisted.nu), dt))
        if args.forms:
            for label, rep in (("untwisted", plain), ("twisted", twisted)):
                rows = [[scalar_to_string(x) for x in row]
                        for row in rep.canonical_form.rows]
                print("     %s form: %s" % (label, rows))
    print("total %.2fs" % (time.perf_counter() - total))


if __name__ == "__main__":
    main()
