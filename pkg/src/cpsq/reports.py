"""Report records and the floating-point comparison discipline.

Every inequality check in this package produces a BoundReport rather than a
bare boolean, so that the evaluated sides survive into logs and serialized
output. Verdicts are three-valued: a strict inequality that lands within a
small safety margin of equality is reported as "inconclusive" instead of
being rounded into a pass or a fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


def compare_strict(lhs: float, rhs: float, *, rel_margin: float = 1e-12) -> str:
    """Verdict for the strict inequality ``lhs < rhs`` in binary64.

    The margin is the larger of 4 ulps of the bigger operand and
    ``rel_margin`` relative to it; differences inside the margin are
    INCONCLUSIVE so that rounding never fabricates a strict inequality.
    """
    lhs = float(lhs)
    rhs = float(rhs)
    scale = max(abs(lhs), abs(rhs))
    margin = max(4.0 * math.ulp(scale), rel_margin * scale)
    if rhs - lhs > margin:
        return PASS
    if lhs - rhs > margin:
        return FAIL
    return INCONCLUSIVE


def worst_verdict(*verdicts: str) -> str:
    """Combine verdicts of several links: any fail fails, else any doubt."""
    if FAIL in verdicts:
        return FAIL
    if INCONCLUSIVE in verdicts:
        return INCONCLUSIVE
    return PASS


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one inequality check.

    The convention is that the verdict asserts ``lhs < rhs`` strictly (the
    one exception is the label "pyramid", which asserts exact equality of an
    integer identity). ``observed`` carries the exact integer side when the
    check compares enumerated data against a real-valued bound, and
    ``applicable`` is False when the evaluation point is outside the stated
    range of the inequality, in which case the verdict draws no conclusion.
    """

    label: str
    x_or_m: int
    lhs: float
    rhs: float
    observed: int | None
    applicable: bool
    verdict: str
