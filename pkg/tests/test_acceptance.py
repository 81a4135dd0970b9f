"""Acceptance checklist: one test per criterion, one verdict line each.

Each criterion aggregates its subchecks through the same registry the
`verify` command uses, so the CLI and this suite can never disagree.
A criterion that fails here fails honestly: the run records every
subcheck so the verdict line pinpoints the offending cells.
"""

import pytest

from zetares import verify_criterion
from zetares.experiments import _CRITERIA

IDS = [f"criterion_{k:02d}_{name}" for k, (name, _) in
       sorted(_CRITERIA.items())]


@pytest.mark.parametrize("k", sorted(_CRITERIA), ids=IDS)
def test_criterion(k):
    aggregate, subs = verify_criterion(k)
    verdict = "PASS" if aggregate.passed else "FAIL"
    print(f"[{verdict}] {aggregate.label}: "
          f"{aggregate.numeric:.0f}/{aggregate.predicted:.0f} subchecks")
    for s in subs:
        if not s.passed:
            print(f"    failing: {s.label} numeric={s.numeric:.6g} "
                  f"predicted={s.predicted:.6g} ratio={s.ratio:.4f} "
                  f"tol={s.tolerance:.3g}")
    assert aggregate.passed, (
        f"criterion {k} fails {int(aggregate.predicted - aggregate.numeric)}"
        f" of {int(aggregate.predicted)} subchecks")
