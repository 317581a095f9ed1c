"""Prime tables: segmented sieve, exact square prefix sums, explicit bounds.

The sieve is an odd-only segmented sieve of Eratosthenes; peak memory is
O(sqrt(limit) + segment), never O(limit). Alongside the primes, every table
carries the prefix sums S_k = p_1^2 + ... + p_k^2 as exact Python integers
(1-based, S_0 = 0), because the windowed enumeration downstream is defined
entirely in terms of differences of these sums and must stay exact well past
2e12.

Two classical explicit bounds are wrapped as checks here:

* Dusart:  N/ln N < pi(N) for N >= 17, and pi(N) < 1.2551 N/ln N for N > 1.
* Rosser:  p_n > n ln n for every n >= 1.
"""

from __future__ import annotations

import math
import struct
from bisect import bisect_right
from dataclasses import dataclass
from itertools import accumulate
from math import isqrt
from pathlib import Path

import numpy as np

from .errors import ResourceLimitError, TableRangeError
from .reports import INCONCLUSIVE, PASS, BoundReport, compare_strict

#: odd candidates per sieve segment (the default keeps segments ~1 MiB)
DEFAULT_SEGMENT_ODDS = 1 << 20

#: pi(N) < DUSART_UPPER_FACTOR * N / ln N for all N > 1
DUSART_UPPER_FACTOR = 1.2551

#: N / ln N < pi(N) holds from this N on
DUSART_LOWER_MIN_N = 17

_INT64_MAX = 2**63 - 1

#: refuse sieve requests whose output alone would pass this many bytes
MAX_SIEVE_BYTES = 4 << 30

CACHE_MAGIC = b"CPSQ1"


class PrimeTable:
    """Immutable table of the primes up to ``limit`` plus square prefix sums.

    ``primes`` is an ascending read-only int64 array; the k-th prime
    (1-based, p_1 = 2) is ``primes[k - 1]``. ``square_prefix`` is the tuple
    (S_0, S_1, ..., S_K) of exact integers with S_k - S_{k-1} = p_k^2.
    Instances never mutate after construction and are safe to share between
    threads.
    """

    __slots__ = ("limit", "primes", "square_prefix", "_prefix_i64")

    def __init__(self, limit: int, primes: np.ndarray) -> None:
        limit = int(limit)
        arr = np.ascontiguousarray(primes, dtype=np.int64)
        arr.flags.writeable = False
        # p <= limit <= isqrt(2^63 - 1) keeps p*p inside int64 here; the
        # running sums still need arbitrary precision, hence Python ints.
        squares = (arr * arr).tolist()
        self.limit = limit
        self.primes = arr
        self.square_prefix: tuple[int, ...] = (0, *accumulate(squares))
        self._prefix_i64: np.ndarray | None = None

    def __len__(self) -> int:
        return int(self.primes.size)

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self.limit}, primes={len(self)})"

    def prefix_i64(self) -> np.ndarray:
        """Read-only int64 mirror of the longest representable prefix of S.

        For every supported limit the whole of S fits; if a future caller
        sieves far enough that S_K overflows int64, the mirror simply stops
        at the last representable entry and callers fall back to the exact
        tuple.
        """
        if self._prefix_i64 is None:
            sp = self.square_prefix
            cut = len(sp)
            if sp[-1] > _INT64_MAX:
                cut = bisect_right(sp, _INT64_MAX)
            mirror = np.fromiter(sp[:cut], dtype=np.int64, count=cut)
            mirror.flags.writeable = False
            self._prefix_i64 = mirror
        return self._prefix_i64


def _dense_sieve(limit: int) -> np.ndarray:
    """Plain boolean sieve used for the base primes up to sqrt(limit)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _estimated_output_bytes(limit: int, segment_odds: int) -> int:
    if limit < 17:
        count = 8
    else:
        # pi(x) < 1.2551 x / ln x for x > 1, so this over-estimates.
        count = int(DUSART_UPPER_FACTOR * limit / math.log(limit)) + 16
    return 8 * count + segment_odds + isqrt(limit)


def sieve_primes(limit: int, segment_odds: int = DEFAULT_SEGMENT_ODDS) -> PrimeTable:
    """Sieve all primes ``p <= limit`` into a PrimeTable.

    ``segment_odds`` is the number of odd candidates handled per segment;
    shrinking it trades a little speed for a smaller working set. Requests
    whose output would exceed MAX_SIEVE_BYTES raise ResourceLimitError
    before anything is allocated.
    """
    limit = int(limit)
    if limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")
    if segment_odds < 1:
        raise ValueError(f"segment_odds must be positive, got {segment_odds}")
    est = _estimated_output_bytes(limit, segment_odds)
    if est > MAX_SIEVE_BYTES:
        raise ResourceLimitError(
            f"sieving to limit={limit} needs an estimated {est} bytes, "
            f"above the {MAX_SIEVE_BYTES} byte ceiling"
        )
    if limit < 2:
        return PrimeTable(limit, np.empty(0, dtype=np.int64))

    base = _dense_sieve(isqrt(limit))
    odd_base = [int(p) for p in base if p >= 3]
    chunks = [np.array([2], dtype=np.int64)]
    span = 2 * segment_odds
    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)  # exclusive
        mask = np.ones((high - low + 1) // 2, dtype=bool)
        for p in odd_base:
            if p * p >= high:
                break
            start = max(p * p, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start < high:
                mask[(start - low) // 2 :: p] = False
        chunks.append(low + 2 * np.flatnonzero(mask).astype(np.int64))
        low += span
    return PrimeTable(limit, np.concatenate(chunks))


def prime_count(n: int, table: PrimeTable) -> int:
    """pi(n): the number of primes <= n, answered from the table.

    ``n`` may be anything up to ``table.limit``; beyond that the table
    cannot answer and a TableRangeError names its limit.
    """
    n = int(n)
    if n > table.limit:
        raise TableRangeError(
            f"pi({n}) is beyond this table (limit {table.limit}); "
            f"sieve to at least {n} first"
        )
    return int(np.searchsorted(table.primes, n, side="right"))


def nth_prime(n: int, table: PrimeTable) -> int:
    """The n-th prime, 1-based (p_1 = 2)."""
    if n < 1:
        raise ValueError(f"prime index must be >= 1, got {n}")
    if n > len(table):
        raise TableRangeError(
            f"table holds only {len(table)} primes (limit {table.limit}), "
            f"cannot produce p_{n}"
        )
    return int(table.primes[n - 1])


@dataclass(frozen=True)
class DusartCheck:
    """Evaluation of the two Dusart inequalities at a single N.

    ``passed`` is True iff every *applicable* strict inequality holds; the
    lower bound only applies from N = 17 on, the upper for all N > 1.
    """

    n: int
    lower_value: float
    pi_value: int
    upper_value: float
    lower_applicable: bool
    upper_applicable: bool
    passed: bool


def check_dusart(n: int, table: PrimeTable) -> DusartCheck:
    """Check N/ln N < pi(N) < 1.2551 N/ln N at N = n."""
    n = int(n)
    if n < 2:
        raise ValueError(f"Dusart check needs N >= 2, got {n}")
    pi_n = prime_count(n, table)
    log_n = math.log(n)
    lower = n / log_n
    upper = DUSART_UPPER_FACTOR * n / log_n
    lower_applicable = n >= DUSART_LOWER_MIN_N
    upper_applicable = n > 1
    passed = True
    if lower_applicable:
        passed = passed and compare_strict(lower, pi_n) == PASS
    if upper_applicable:
        passed = passed and compare_strict(pi_n, upper) == PASS
    return DusartCheck(
        n=n,
        lower_value=lower,
        pi_value=pi_n,
        upper_value=upper,
        lower_applicable=lower_applicable,
        upper_applicable=upper_applicable,
        passed=passed,
    )


def check_rosser(n: int, table: PrimeTable) -> BoundReport:
    """Check p_n > n ln n (trivially true at n = 1 where ln 1 = 0)."""
    p_n = nth_prime(n, table)
    lhs = n * math.log(n)
    return BoundReport(
        label="rosser",
        x_or_m=n,
        lhs=lhs,
        rhs=float(p_n),
        observed=p_n,
        applicable=True,
        verdict=compare_strict(lhs, float(p_n)),
    )


# ---------------------------------------------------------------------------
# binary cache: "CPSQ1" | limit u64le | count u64le | primes u64le...
# ---------------------------------------------------------------------------

def save_table(table: PrimeTable, path: str | Path) -> None:
    """Write the table's primes to ``path`` in the CPSQ1 cache format."""
    path = Path(path)
    payload = table.primes.astype("<u8").tobytes()
    header = CACHE_MAGIC + struct.pack("<QQ", table.limit, len(table))
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(header + payload)
    tmp.replace(path)


def load_table(path: str | Path) -> PrimeTable:
    """Read a CPSQ1 cache file back into a PrimeTable.

    The square prefix sums are recomputed from scratch and the structural
    invariants of the prime list (ascending, first prime 2, odd beyond the
    first, within the stored limit) are re-validated; any violation raises
    ValueError rather than returning a corrupt table.
    """
    raw = Path(path).read_bytes()
    head = len(CACHE_MAGIC) + 16
    if len(raw) < head or raw[: len(CACHE_MAGIC)] != CACHE_MAGIC:
        raise ValueError(f"{path}: not a CPSQ1 prime cache")
    limit, count = struct.unpack_from("<QQ", raw, len(CACHE_MAGIC))
    if len(raw) != head + 8 * count:
        raise ValueError(
            f"{path}: truncated cache (expected {count} primes, "
            f"{len(raw) - head} payload bytes present)"
        )
    primes = np.frombuffer(raw, dtype="<u8", offset=head).astype(np.int64)
    if primes.size:
        if primes[0] != 2 and limit >= 2:
            raise ValueError(f"{path}: cache does not start at p_1 = 2")
        if int(primes[-1]) > limit or int(primes[0]) < 2:
            raise ValueError(f"{path}: cached primes fall outside limit {limit}")
        if np.any(np.diff(primes) <= 0):
            raise ValueError(f"{path}: cached primes are not strictly increasing")
        if primes.size > 1 and np.any(primes[1:] % 2 == 0):
            raise ValueError(f"{path}: cached primes contain an even entry > 2")
    table = PrimeTable(int(limit), primes)
    sp = table.square_prefix
    if any(sp[k] >= sp[k + 1] for k in range(len(sp) - 1)):
        raise ValueError(f"{path}: recomputed prefix sums are not increasing")
    return table
