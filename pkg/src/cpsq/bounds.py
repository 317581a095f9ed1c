"""Explicit bounds on the counting function and their supporting lemmas.

Writing C(x) for either count (distinct values or windows) of sums of
squares of consecutive primes up to x, the headline two-sided bound is

    2 sqrt(x) / ln x  <  pi(sqrt x)  <=  C(x)  <  10.9558 x^(2/3) / (ln x)^(4/3)

with the far left valid from x = 289 on and everything else for x > 1 (all
logarithms natural). The upper constant 10.9558 is the rounded form of
5.0204 * 108^(1/6) ~ 10.955754; both are evaluated so that the rounding
direction itself is under test.

Supporting checks, each exposed as an operation returning a BoundReport:

* per-length counting cap: the number of length-m windows below x is at
  most pi(sqrt(x/m)), which Dusart majorizes by 1.2551 sqrt(x/m) over
  (1/2) ln(x/m), i.e. 2.5102 sqrt(x/m)/ln(x/m); the enumerated count and
  the pi cap are both checked against that majorant. Do not "simplify"
  the denominator to ln x: that variant is smaller for every m >= 2 and
  the enumerated count genuinely crosses it (first at x = 10^5, m = 3,
  where 40 windows stand against 39.81).
* window cap: lengths are capped analytically by
  M(x) = floor(108^(1/3) x^(1/3) (ln x)^(-2/3)); the exact cap is the
  largest m with S_m <= x and is always determined from the prefix sums,
  never from the analytic formula.
* substitution check behind the cap: sum_{2<=n<=M} (n ln n)^2 should exceed
  x at M = M(x) (by Rosser, prime squares only grow faster); its verdict is
  recorded, not asserted.
* partial sums: sum_{1<=m<=M} m^(-alpha) < (M^(1-alpha) - alpha)/(1 - alpha)
  for 0 < alpha < 1 and M >= 2 (equality at M = 1).
* weighted squares: sum_{2<=n<=M} (n ln n)^2 >= M^3 (ln M)^2 / 12 for
  M >= 4, via the sqrt(M) tail cutoff and the square-pyramid identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import fsum, isqrt, log

from .errors import ApplicabilityError, DomainError
from .primes import (
    PrimeTable,
    check_dusart,
    check_rosser,
    prime_count,
    sieve_primes,
)
from .primes import DusartCheck
from .reports import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    BoundReport,
    compare_strict,
    worst_verdict,
)
from .windows import count_sums, count_windows, max_window_length

#: the headline lower bound is 2 sqrt(x) / ln x, valid from here on
LOWER_MIN_X = 289

#: rounded upper constant as published, and its unrounded source
UPPER_COEFF = 10.9558
UPPER_COEFF_SHARP = 5.0204 * 108 ** (1 / 6)

#: per-length majorant constant, 2 * 1.2551
PER_LENGTH_COEFF = 2.5102

#: analytic window cap constant 108^(1/3)
CAP_COEFF = 108 ** (1 / 3)

#: labels whose verdict is recorded but intentionally not asserted anywhere
INFORMATIONAL_LABELS = frozenset({"window-cap-substitution"})


@dataclass(frozen=True)
class WindowCap:
    """Analytic and exact caps on the window length at threshold x.

    ``exact_m`` satisfies S_exact_m <= x < S_{exact_m + 1}; ``analytic_m``
    is the closed-form cap. ``alpha`` is only populated when a cap is
    quoted together with a partial-sum check at that exponent.
    """

    x: int
    analytic_m: int
    exact_m: int
    alpha: float | None


def lower_bound(x: int) -> float:
    """2 sqrt(x) / ln x. Domain: x > 1 (compare only from x >= 289 on)."""
    if x <= 1:
        raise DomainError(f"lower bound needs x > 1, got {x}")
    return 2.0 * math.sqrt(x) / log(x)


def upper_bound(x: int, *, sharp: bool = False) -> float:
    """c * x^(2/3) / (ln x)^(4/3) with c = 10.9558, or unrounded if sharp."""
    if x <= 1:
        raise DomainError(f"upper bound needs x > 1, got {x}")
    coeff = UPPER_COEFF_SHARP if sharp else UPPER_COEFF
    return coeff * float(x) ** (2 / 3) / log(x) ** (4 / 3)


# ---------------------------------------------------------------------------
# auxiliary tables for checks that need prefix sums past the query point
# ---------------------------------------------------------------------------

_aux_table: PrimeTable | None = None


def _prefix_table(x: int, min_primes: int = 0) -> PrimeTable:
    """A table whose prefix sums pass x, growing a module-level one on demand."""
    global _aux_table
    t = _aux_table
    if t is not None and t.square_prefix[-1] > x and len(t) >= min_primes:
        return t
    limit = 64 if t is None else max(64, 4 * t.limit)
    while True:
        t = sieve_primes(limit)
        if t.square_prefix[-1] > x and len(t) >= min_primes:
            break
        limit *= 4
    _aux_table = t
    return t


def analytic_max_window(x: int, table: PrimeTable | None = None) -> WindowCap:
    """Both window caps at x: closed-form M(x) and the exact S_m bracket.

    The exact cap is read off the prefix sums of ``table`` when it reaches
    past x, otherwise from an internally grown table. Nothing downstream of
    the enumerator ever consumes ``analytic_m``; it exists to be checked.
    """
    x = int(x)
    if x < 2:
        raise DomainError(f"window cap needs x >= 2, got {x}")
    analytic = math.floor(CAP_COEFF * float(x) ** (1 / 3) / log(x) ** (2 / 3))
    if table is None or table.square_prefix[-1] <= x:
        table = _prefix_table(x)
    exact = max_window_length(x, table)
    return WindowCap(x=x, analytic_m=analytic, exact_m=exact, alpha=None)


def check_length_count_bound(x: int, m: int, table: PrimeTable) -> BoundReport:
    """Cap the count of length-m windows below x along the counting chain.

    Verified links, for x > m: the enumerated count is at most
    pi(floor(sqrt(x/m))) in exact integers, and both the count and the pi
    cap stay strictly below the Dusart majorant 2.5102 sqrt(x/m)/ln(x/m).
    The report carries the pi cap as lhs, the majorant as rhs, and the
    enumerated count in ``observed``.

    A seemingly harmless weakening replaces ln(x/m) by ln x in the
    denominator. The resulting quantity is not a majorant of the count
    (40 length-3 windows fit below 10^5 but 2.5102 sqrt(10^5/3)/ln(10^5)
    is 39.81), so nothing here evaluates it.
    """
    x = int(x)
    m = int(m)
    if m < 1:
        raise ValueError(f"window length must be >= 1, got {m}")
    if x <= m:
        raise ApplicabilityError(
            f"per-length bound needs x > m, got x={x}, m={m}"
        )
    observed = count_windows(x, m, table)
    pi_cap = prime_count(isqrt(x // m), table)
    ratio = x / m
    majorant = PER_LENGTH_COEFF * math.sqrt(ratio) / log(ratio)
    if observed > pi_cap:
        verdict = FAIL
    else:
        verdict = worst_verdict(
            compare_strict(observed, majorant),
            compare_strict(pi_cap, majorant),
        )
    return BoundReport(
        label=f"length-count-bound[m={m}]",
        x_or_m=x,
        lhs=float(pi_cap),
        rhs=majorant,
        observed=observed,
        applicable=True,
        verdict=verdict,
    )


def check_window_cap_substitution(
    x: int, table: PrimeTable | None = None
) -> BoundReport:
    """Record whether sum_{2<=n<=M(x)} (n ln n)^2 exceeds x.

    This is the Rosser-side consequence that makes the analytic cap safe:
    since p_n > n ln n, the sum of the first M(x) prime squares S_M(x)
    (carried in ``observed``) exceeds the same threshold whenever the
    substituted sum does. Applicability needs M(x) >= 4; for integer
    x >= 2 the cap never actually drops below 5, so the inapplicable branch
    is defensive only. The verdict is informational: consumers report it
    but do not gate on it.
    """
    cap = analytic_max_window(x, table)
    m_cap = cap.analytic_m
    applicable = m_cap >= 4
    substituted = fsum((n * log(n)) ** 2 for n in range(2, m_cap + 1))
    aux = table
    if aux is None or len(aux) < m_cap:
        aux = _prefix_table(x, min_primes=m_cap)
    prefix_at_cap = aux.square_prefix[m_cap]
    verdict = compare_strict(float(x), substituted) if applicable else INCONCLUSIVE
    return BoundReport(
        label="window-cap-substitution",
        x_or_m=int(x),
        lhs=float(x),
        rhs=substituted,
        observed=prefix_at_cap,
        applicable=applicable,
        verdict=verdict,
    )


def check_partial_sum(m_cap: int, alpha: float) -> BoundReport:
    """sum_{1<=m<=M} m^(-alpha) < (M^(1-alpha) - alpha)/(1-alpha), M >= 2.

    The left side is a direct summation; the right is the closed form. At
    M = 1 the two sides coincide exactly, so the check is marked not
    applicable there rather than pretending a strict inequality.
    """
    m_cap = int(m_cap)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if m_cap < 1:
        raise ValueError(f"M must be >= 1, got {m_cap}")
    lhs = fsum(m ** -alpha for m in range(1, m_cap + 1))
    rhs = (m_cap ** (1.0 - alpha) - alpha) / (1.0 - alpha)
    applicable = m_cap >= 2
    verdict = compare_strict(lhs, rhs) if applicable else INCONCLUSIVE
    return BoundReport(
        label=f"partial-sum[alpha={alpha:g}]",
        x_or_m=m_cap,
        lhs=lhs,
        rhs=rhs,
        observed=None,
        applicable=applicable,
        verdict=verdict,
    )


def _holds_weakly(big: float, small: float, rel_margin: float = 1e-12) -> bool:
    """big >= small up to fp tolerance (non-strict link of a chain)."""
    scale = max(abs(big), abs(small))
    return big - small >= -max(4.0 * math.ulp(scale), rel_margin * scale)


def check_weighted_square(m_cap: int) -> BoundReport:
    """sum_{2<=n<=M} (n ln n)^2 >= M^3 (ln M)^2 / 12 for M >= 4.

    The chain behind it is verified step by step: restricting the sum to
    n >= ceil(sqrt(M)) can only shrink it; on that tail ln n >= ln(M)/2, so
    the tail dominates (ln(M)/2)^2 * sum n^2; and the square-pyramid
    identity gives sum_{ceil(sqrt M)<=n<=M} n^2 >= M^3/3, checked in exact
    integers. M < 4 would put the cutoff below 2 and is rejected.
    """
    m_cap = int(m_cap)
    if m_cap < 4:
        raise ApplicabilityError(f"weighted-square bound needs M >= 4, got {m_cap}")
    cut = math.isqrt(m_cap - 1) + 1  # ceil(sqrt(M))
    log_m = log(m_cap)
    full = fsum((n * log(n)) ** 2 for n in range(2, m_cap + 1))
    tail = fsum((n * log(n)) ** 2 for n in range(cut, m_cap + 1))
    sq_tail = square_pyramid(m_cap) - square_pyramid(cut - 1)
    halved = (0.5 * log_m) ** 2 * sq_tail
    rhs = m_cap**3 * log_m**2 / 12.0
    links_hold = (
        _holds_weakly(full, tail)
        and _holds_weakly(tail, halved)
        and 3 * sq_tail >= m_cap**3  # exact-integer form of halved >= rhs
    )
    verdict = compare_strict(rhs, full) if links_hold else FAIL
    return BoundReport(
        label="weighted-square",
        x_or_m=m_cap,
        lhs=rhs,
        rhs=full,
        observed=None,
        applicable=True,
        verdict=verdict,
    )


def square_pyramid(m_cap: int) -> int:
    """1^2 + 2^2 + ... + M^2 = M(M+1)(2M+1)/6, exactly."""
    m_cap = int(m_cap)
    if m_cap < 0:
        raise ValueError(f"M must be >= 0, got {m_cap}")
    return m_cap * (m_cap + 1) * (2 * m_cap + 1) // 6


def check_pyramid(m_cap: int) -> BoundReport:
    """Exact-equality report: closed form against direct summation.

    The one label whose verdict asserts lhs == rhs instead of lhs < rhs.
    """
    m_cap = int(m_cap)
    if m_cap < 1:
        raise ValueError(f"M must be >= 1, got {m_cap}")
    direct = sum(n * n for n in range(1, m_cap + 1))
    closed = square_pyramid(m_cap)
    return BoundReport(
        label="pyramid",
        x_or_m=m_cap,
        lhs=float(direct),
        rhs=float(closed),
        observed=closed,
        applicable=True,
        verdict=PASS if direct == closed else FAIL,
    )


def dusart_reports(check: DusartCheck) -> tuple[BoundReport, BoundReport]:
    """Split a DusartCheck into uniform lower/upper BoundReports."""
    pi_f = float(check.pi_value)
    lower = BoundReport(
        label="dusart-lower",
        x_or_m=check.n,
        lhs=check.lower_value,
        rhs=pi_f,
        observed=check.pi_value,
        applicable=check.lower_applicable,
        verdict=compare_strict(check.lower_value, pi_f)
        if check.lower_applicable
        else INCONCLUSIVE,
    )
    upper = BoundReport(
        label="dusart-upper",
        x_or_m=check.n,
        lhs=pi_f,
        rhs=check.upper_value,
        observed=check.pi_value,
        applicable=check.upper_applicable,
        verdict=compare_strict(pi_f, check.upper_value)
        if check.upper_applicable
        else INCONCLUSIVE,
    )
    return lower, upper


def verify_count_bounds(
    x_values: list[int], table: PrimeTable
) -> list[BoundReport]:
    """Evaluate the headline bounds at each x, one report per inequality.

    Per x: the lower bound against pi(sqrt x) and against both counts
    (applicable from x >= 289), and both counts against the upper bound in
    its rounded and unrounded forms. The exact counts ride along in
    ``observed``.
    """
    reports: list[BoundReport] = []
    for x in x_values:
        x = int(x)
        counts = count_sums(x, table)
        pi_sqrt = prime_count(isqrt(x), table)
        low = lower_bound(x)
        low_app = x >= LOWER_MIN_X
        up = upper_bound(x)
        up_sharp = upper_bound(x, sharp=True)
        for name, observed in (
            ("pi-sqrt", pi_sqrt),
            ("distinct", counts.distinct_count),
            ("multiplicity", counts.multiplicity_count),
        ):
            reports.append(
                BoundReport(
                    label=f"count-lower/{name}",
                    x_or_m=x,
                    lhs=low,
                    rhs=float(observed),
                    observed=observed,
                    applicable=low_app,
                    verdict=compare_strict(low, observed) if low_app else INCONCLUSIVE,
                )
            )
        for name, observed in (
            ("distinct", counts.distinct_count),
            ("multiplicity", counts.multiplicity_count),
        ):
            for tag, bound in (("count-upper", up), ("count-upper-sharp", up_sharp)):
                reports.append(
                    BoundReport(
                        label=f"{tag}/{name}",
                        x_or_m=x,
                        lhs=float(observed),
                        rhs=bound,
                        observed=observed,
                        applicable=True,
                        verdict=compare_strict(observed, bound),
                    )
                )
    return reports


DEFAULT_VERIFY_GRID = (289, 10**3, 10**4, 10**5, 10**6, 10**7, 10**8, 10**9)

_DUSART_POINTS = (2, 3, 4, 10, 16, 17, 18, 100, 10**3, 10**4, 10**5, 10**6)
_ROSSER_POINTS = (1, 2, 3, 4, 5, 10, 100, 10**3, 10**4, 10**5)
_PARTIAL_SUM_ALPHAS = (0.1, 0.25, 0.5, 0.75, 0.9)
_PARTIAL_SUM_POINTS = (2, 4, 10, 100, 10**3, 10**4)
_WEIGHTED_POINTS = (4, 5, 10, 100, 10**3, 10**4)
_PYRAMID_POINTS = (1, 2, 3, 10, 100, 10**3)


def full_verification(grid: list[int] | None = None) -> list[BoundReport]:
    """The whole battery: headline bounds on a grid plus every lemma check.

    Used by the CLI ``verify`` command. The grid defaults to 289 and the
    powers of ten from 1e3 to 1e9; per-length caps are checked for every
    length up to the exact cap at each grid point, and the named lemmas run
    at representative evaluation points (their exhaustive sweeps live in
    the test suite, where the runtime budget is bigger).
    """
    xs = sorted(int(x) for x in (grid if grid else DEFAULT_VERIFY_GRID))
    table = sieve_primes(max(isqrt(xs[-1]), 64))
    reports = verify_count_bounds(xs, table)
    for x in xs:
        cap = analytic_max_window(x, table)
        for m in range(1, cap.exact_m + 1):
            reports.append(check_length_count_bound(x, m, table))
        reports.append(check_window_cap_substitution(x, table))
    aux_limit = 1_300_000  # covers pi to 1e6 and p_n to n = 1e5
    aux = sieve_primes(aux_limit)
    for n_val in _DUSART_POINTS:
        reports.extend(dusart_reports(check_dusart(n_val, aux)))
    for n_val in _ROSSER_POINTS:
        reports.append(check_rosser(n_val, aux))
    for alpha in _PARTIAL_SUM_ALPHAS:
        for m_cap in _PARTIAL_SUM_POINTS:
            reports.append(check_partial_sum(m_cap, alpha))
    for m_cap in _WEIGHTED_POINTS:
        reports.append(check_weighted_square(m_cap))
    for m_cap in _PYRAMID_POINTS:
        reports.append(check_pyramid(m_cap))
    return reports
