"""Acceptance suite: every criterion at its pinned tolerance.

Two tolerance criteria are known not to hold for strictly first-order
formulas and are expected to report FAIL honestly rather than be loosened:

* criterion 4: the resummed trajectory drifts from the integrated orbit at
  second order in the coupling; for a=2, lam=0.01 the measured sup-norm on
  [0, 50] is about 0.185 against the pinned 0.1.
* criterion 7: spectral-gap residuals are second-order in the coupling and
  exceed the pinned 1e-4 / 1e-5 bounds for n >= 2 (measured up to ~1e-3).

`anharmonic verify` prints the same criteria with measured details.
"""

import pytest

from anharmonic import acceptance


@pytest.mark.parametrize(
    "criterion", acceptance.ALL_CRITERIA, ids=[fn.__name__ for fn in acceptance.ALL_CRITERIA]
)
def test_criterion(criterion):
    result = criterion()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status}  criterion {result.cid}: {result.name} -- {result.detail}")
    assert result.passed, f"criterion {result.cid} ({result.name}): {result.detail}"
