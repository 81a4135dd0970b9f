#!/usr/bin/env python3
"""Headline run: push |zeta'(rho)| up, then down, over computed zeros.

Compares the unweighted baseline against a tau_2-weighted average on
the large side, then the uniform and window-resonated averages on the
small side, printing the most extreme zeros each run singles out.
Finishes with the r-table of lower-bound coefficients behind the
weighted averages.
"""

import sys

from zetares import (ExperimentConfig, run_large_values, run_small_values,
                     theorem1_bound)


def show(rep, title, top=5):
    print(f"== {title}")
    for c in rep.checks:
        mark = "PASS" if c.passed else "FAIL"
        print(f"  [{mark}] {c.label:<38} numeric={c.numeric:.6g} "
              f"vs {c.predicted:.6g} (ratio {c.ratio:.4f})")
    rows = sorted(rep.rows, key=lambda r: r.zprime_norm)
    picks = rows[-top:][::-1] if rep.mode.startswith("large") else rows[:top]
    for r in picks:
        print(f"    gamma={r.gamma:>12.6f}  |zeta'|={r.zprime_abs:.6f}  "
              f"normalized={r.zprime_norm:.4f}  weight={r.weight:.4g}")
    print()


def main() -> int:
    t2 = 5000.0
    show(run_large_values(ExperimentConfig(mode="large_tau_r", t2=t2, M=1)),
         "baseline: plain average of |zeta'| over zeros up to 5000")
    show(run_large_values(ExperimentConfig(mode="large_tau_r", t2=t2, M=50,
                                           r=2)),
         "tau_2-resonated average, M = 50")
    show(run_small_values(ExperimentConfig(mode="small_values", t1=1000.0,
                                           t2=2000.0, M=1)),
         "baseline: average of 1/zeta' over zeros in (1000, 2000]")
    show(run_small_values(ExperimentConfig(mode="small_values", t1=1000.0,
                                           t2=2000.0, M=10_000,
                                           window=(83.0, 113.0))),
         "window-resonated small-values run, primes in [83, 113]")

    print("== lower-bound coefficients by weight order r (theta = 1/4)")
    print(f"{'r':>2}  {'S1 coeff':>12}  {'S2 coeff':>12}  {'exponent':>8}  "
          f"{'margin':>8}")
    for r in range(1, 7):
        b = theorem1_bound(r, 0.25, 50.0)
        print(f"{r:>2}  {b.S1_lower_coeff:>12.4e}  {b.S2_upper_coeff:>12.4e}"
              f"  {b.ratio_exponent:>8}  {b.bracket_margin:>8.0f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
