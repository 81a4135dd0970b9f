#!/usr/bin/env python3
"""Trace how close practical weights get to the optimal resonance gain.

Two tables.  First, at desk-size truncations, the exact optimal
quadratic-form gain (top eigenvalue) against the gain of the tau_2
divisor weight used by the large-values experiments.  Second, the
asymptotic Euler-product route: log Q1 / log Q2 against the predicted
sqrt(log M / log log M); the approach to the limit is logarithmic, so
expect a slow crawl upward even at astronomically large log M.
"""

import argparse
import sys

from zetares import (ResourceLimitError, build_prime_table,
                     eigen_optimal_ratio, euler_products, make_params,
                     quadform, tau_k)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--mcaps", default="10,37,100,500,2000",
                    help="comma list of truncation points for the exact table")
    ap.add_argument("--logms", default="200,400,600,1000,2000,1e5",
                    help="comma list of log M values for the asymptotic table")
    args = ap.parse_args()

    print(f"{'M':>6}  {'eigen gain':>12}  {'tau_2 gain':>12}  {'fraction':>9}")
    for m in (int(s) for s in args.mcaps.split(",")):
        lam, _ = eigen_optimal_ratio(m)
        tab = build_prime_table(m)
        rep = quadform({n: tau_k(n, 2, tab) for n in range(1, m + 1)}, m)
        print(f"{m:>6}  {lam:>12.6f}  {rep.ratio:>12.6f}  "
              f"{rep.ratio / lam:>9.4f}")

    print()
    print(f"{'log M':>10}  {'log Q1/Q2':>12}  {'predicted':>12}  "
          f"{'ratio':>7}  {'route':>13}")
    for logm in (float(s) for s in args.logms.split(",")):
        params = make_params(logm)
        try:
            q1, q2, pred = euler_products(params, "exact_sieve")
            route = "exact_sieve"
        except ResourceLimitError:
            q1, q2, pred = euler_products(params, "pnt_integral")
            route = "pnt_integral"
        gain = q1 - q2
        print(f"{logm:>10.0f}  {gain:>12.4f}  {pred:>12.4f}  "
              f"{gain / pred:>7.4f}  {route:>13}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
