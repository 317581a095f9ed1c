"""Enumeration of sums of squares of consecutive primes.

A *window* (n, m) is the run p_n, p_{n+1}, ..., p_{n+m-1} of m consecutive
primes (1-based start); its value is the sum of their squares, computed as
the prefix-sum difference S_{n+m-1} - S_{n-1}. For a fixed length m the
value is strictly increasing in n, so the windows with value <= x form a
prefix n = 1..c_m, and the minimal value over n is S_m itself, which is
strictly increasing in m. Those two monotonicities drive everything here:

* enumeration walks lengths m = 1, 2, ... until S_m > x, carrying a single
  pointer that only ever moves down (two-pointer scan, O(pi(sqrt x) + M)
  pointer steps in total);
* per-length counts and exact-value lookups are binary searches;
* counting never materializes the representations; values are reduced per
  length in vectorized batches and deduplicated at the end, so x around
  1e12 streams through in bounded memory.

Counts come in two flavors and both are always computed: the number of
distinct representable values (set semantics) and the number of windows
(multiplicity semantics). Distinct values could in principle collide across
different windows; nothing here assumes they do or do not.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import isqrt
from typing import Iterator

import numpy as np

from .errors import TableRangeError
from .primes import PrimeTable

__all__ = [
    "Representation",
    "CountReport",
    "enumerate_representations",
    "count_windows",
    "count_sums",
    "find_representations",
    "values_up_to",
    "max_window_length",
]


@dataclass(frozen=True)
class Representation:
    """One window of consecutive primes whose squares sum to ``value``."""

    start_index: int
    length: int
    value: int


@dataclass(frozen=True)
class CountReport:
    """Counting summary at a threshold x.

    ``per_length`` maps every window length m = 1..max(1, max_length_seen)
    to the number of windows of that length with value <= x; its values sum
    to ``multiplicity_count``. ``distinct_count`` counts distinct values and
    so never exceeds the multiplicity count.
    """

    x: int
    distinct_count: int
    multiplicity_count: int
    per_length: dict[int, int]
    max_length_seen: int


def _require_coverage(x: int, table: PrimeTable) -> None:
    """Windows of value <= x only ever contain primes <= sqrt(x)."""
    need = isqrt(x)
    if table.limit < need:
        raise TableRangeError(
            f"table limit {table.limit} is below floor(sqrt({x})) = {need}; "
            f"sieve to at least {need} first"
        )


def _length_counts(x: int, table: PrimeTable) -> list[tuple[int, int]]:
    """(m, c_m) for every length with at least one window of value <= x.

    c_m is the count of start indices, found by a two-pointer scan: the
    largest valid start for length m never grows as m does, so one pointer
    walking down amortizes the whole scan.
    """
    sp = table.square_prefix
    k = len(table)
    c = int(np.searchsorted(table.primes, isqrt(x), side="right"))
    out: list[tuple[int, int]] = []
    m = 1
    while c > 0:
        out.append((m, c))
        m += 1
        c = min(c, k - m + 1)
        while c > 0 and sp[c + m - 1] - sp[c - 1] > x:
            c -= 1
    return out


def enumerate_representations(
    x: int, table: PrimeTable
) -> Iterator[Representation]:
    """Yield every window with value <= x, ordered by (length, start_index).

    The table must cover floor(sqrt(x)). Yields lazily; consuming only a
    prefix does only a prefix of the work.
    """
    x = int(x)
    if x < 1:
        raise ValueError(f"x must be a positive integer, got {x}")
    _require_coverage(x, table)
    sp = table.square_prefix
    for m, c in _length_counts(x, table):
        for n in range(1, c + 1):
            yield Representation(n, m, sp[n + m - 1] - sp[n - 1])


def count_windows(x: int, length: int, table: PrimeTable) -> int:
    """Number of windows of the given length with value <= x.

    Binary search on the start index; windows of a fixed length are
    monotone in it. Returns 0 when even the first window S_length exceeds x.
    """
    x = int(x)
    m = int(length)
    if x < 1:
        raise ValueError(f"x must be a positive integer, got {x}")
    if m < 1:
        raise ValueError(f"window length must be >= 1, got {m}")
    _require_coverage(x, table)
    sp = table.square_prefix
    k = len(table)
    if m > k or sp[m] > x:
        return 0
    lo, hi = 1, k - m + 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if sp[mid + m - 1] - sp[mid - 1] <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def count_sums(x: int, table: PrimeTable) -> CountReport:
    """Count representable values <= x under both semantics in one pass.

    Multiplicity is the sum of the per-length counts; distinct values are
    deduplicated from per-length vectorized batches (the batches of window
    values, not Representation objects, so nothing quadratic or per-object
    survives the pass).
    """
    x = int(x)
    if x < 1:
        raise ValueError(f"x must be a positive integer, got {x}")
    _require_coverage(x, table)
    counts = _length_counts(x, table)
    per_length = {m: c for m, c in counts}
    if not per_length:
        per_length = {1: 0}
    multiplicity = sum(per_length.values())
    max_length = counts[-1][0] if counts else 0

    distinct = 0
    if counts:
        top = max(c + m for m, c in counts)  # one past the largest index used
        mirror = table.prefix_i64()
        if top <= mirror.size:
            batches = [mirror[m : m + c] - mirror[:c] for m, c in counts]
            distinct = int(np.unique(np.concatenate(batches)).size)
        else:
            # prefix sums past int64: fall back to exact integers
            sp = table.square_prefix
            seen: set[int] = set()
            for m, c in counts:
                seen.update(sp[n + m - 1] - sp[n - 1] for n in range(1, c + 1))
            distinct = len(seen)
    return CountReport(
        x=x,
        distinct_count=distinct,
        multiplicity_count=multiplicity,
        per_length=per_length,
        max_length_seen=max_length,
    )


def find_representations(target: int, table: PrimeTable) -> list[Representation]:
    """All windows whose value equals ``target`` exactly, ordered by length.

    For each length the window value is strictly increasing in the start
    index, so there is at most one hit per length and a binary search finds
    it. Returns [] when the target is not representable.
    """
    target = int(target)
    if target < 1:
        raise ValueError(f"target must be a positive integer, got {target}")
    _require_coverage(target, table)
    sp = table.square_prefix
    k = len(table)
    out: list[Representation] = []
    m = 1
    while m <= k and sp[m] <= target:
        lo, hi = 1, k - m + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if sp[mid + m - 1] - sp[mid - 1] < target:
                lo = mid + 1
            else:
                hi = mid
        if sp[lo + m - 1] - sp[lo - 1] == target:
            out.append(Representation(lo, m, target))
        m += 1
    return out


def values_up_to(x: int, table: PrimeTable) -> list[int]:
    """Sorted list of the distinct representable values <= x."""
    x = int(x)
    if x < 1:
        raise ValueError(f"x must be a positive integer, got {x}")
    _require_coverage(x, table)
    counts = _length_counts(x, table)
    if not counts:
        return []
    top = max(c + m for m, c in counts)
    mirror = table.prefix_i64()
    if top <= mirror.size:
        batches = [mirror[m : m + c] - mirror[:c] for m, c in counts]
        return [int(v) for v in np.unique(np.concatenate(batches))]
    sp = table.square_prefix
    seen: set[int] = set()
    for m, c in counts:
        seen.update(sp[n + m - 1] - sp[n - 1] for n in range(1, c + 1))
    return sorted(seen)


def max_window_length(x: int, table: PrimeTable) -> int:
    """The largest m with S_m <= x, i.e. the longest window from p_1.

    Determined exactly from the prefix sums: S_m <= x < S_{m+1}. The table
    must extend far enough that S_K > x, otherwise there is no witness for
    the upper neighbor and a TableRangeError asks for more primes.
    """
    x = int(x)
    if x < 1:
        raise ValueError(f"x must be a positive integer, got {x}")
    sp = table.square_prefix
    if sp[-1] <= x:
        raise TableRangeError(
            f"prefix sums of this table end at S_{len(table)} = {sp[-1]} <= {x}; "
            f"a longer table is needed to bracket the maximal window"
        )
    return bisect_right(sp, x) - 1
