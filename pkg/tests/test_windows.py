"""Window enumeration, counting under both semantics, and exact lookups."""

from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpsq import (
    REFERENCE_VALUES,
    Representation,
    TableRangeError,
    count_sums,
    count_windows,
    enumerate_representations,
    find_representations,
    max_window_length,
    prime_count,
    sieve_primes,
    values_up_to,
)
from oracles import oracle_distinct_values, oracle_windows


def as_tuples(reps):
    return [(r.length, r.start_index, r.value) for r in reps]


def test_enumerate_x_50_exact(table_small):
    got = as_tuples(enumerate_representations(50, table_small))
    assert got == [
        (1, 1, 4),
        (1, 2, 9),
        (1, 3, 25),
        (1, 4, 49),
        (2, 1, 13),
        (2, 2, 34),
        (3, 1, 38),
    ]


def test_values_up_to_100(table_small):
    assert values_up_to(100, table_small) == [4, 9, 13, 25, 34, 38, 49, 74, 83, 87]


def test_values_below_4_are_empty(table_small):
    assert values_up_to(1, table_small) == []
    assert values_up_to(3, table_small) == []
    with pytest.raises(ValueError):
        values_up_to(0, table_small)


def test_count_windows_examples(table_small):
    assert count_windows(50, 1, table_small) == 4
    assert count_windows(50, 2, table_small) == 2
    assert count_windows(50, 3, table_small) == 1
    assert count_windows(50, 4, table_small) == 0
    assert count_windows(2397, 10, table_small) == 1  # S_10 itself
    with pytest.raises(ValueError):
        count_windows(50, 0, table_small)


def test_count_sums_at_5000(table_small):
    report = count_sums(5000, table_small)
    assert report.distinct_count == 91
    assert report.multiplicity_count == 91  # no value collides below 5000
    assert report.max_length_seen == 12
    assert report.per_length[1] == prime_count(isqrt(5000), table_small)
    assert sum(report.per_length.values()) == 91


def test_count_sums_below_first_value(table_small):
    report = count_sums(3, table_small)
    assert report.distinct_count == 0
    assert report.multiplicity_count == 0
    assert report.per_length == {1: 0}
    assert report.max_length_seen == 0


def test_find_named_targets(table_small):
    assert find_representations(2020, table_small) == [Representation(7, 4, 2020)]
    assert find_representations(2189, table_small) == [Representation(6, 5, 2189)]
    assert find_representations(6, table_small) == []
    assert find_representations(4, table_small) == [Representation(1, 1, 4)]


def test_find_resolves_to_real_primes(table_small):
    (rep,) = find_representations(2020, table_small)
    run = table_small.primes[rep.start_index - 1 : rep.start_index - 1 + rep.length]
    assert list(run) == [17, 19, 23, 29]
    assert sum(int(p) ** 2 for p in run) == 2020


def test_max_window_length(table_small):
    assert max_window_length(50, table_small) == 3  # S_3 = 38 <= 50 < S_4 = 87
    assert max_window_length(5000, table_small) == 12
    assert max_window_length(2397, table_small) == 10  # S_10 exactly
    assert max_window_length(4, table_small) == 1
    assert max_window_length(3, table_small) == 0


def test_max_window_length_needs_a_witness(table_small):
    with pytest.raises(TableRangeError, match="longer table"):
        max_window_length(10**30, table_small)


def test_coverage_guard_names_the_needed_limit():
    tiny = sieve_primes(5)
    with pytest.raises(TableRangeError, match="sieve to at least 10"):
        count_sums(100, tiny)
    with pytest.raises(TableRangeError):
        list(enumerate_representations(100, tiny))


def test_reference_table_is_reproduced(table_small):
    assert values_up_to(5000, table_small) == list(REFERENCE_VALUES)


# ---------------------------------------------------------------------------
# oracle equivalence at fixed points (the exhaustive sweep is an acceptance
# test; these keep the unit suite fast but honest)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("x", [1, 3, 4, 5, 9, 13, 49, 50, 100, 1000, 2397, 4999, 5000, 12345])
def test_enumeration_matches_oracle(x, table_small):
    assert as_tuples(enumerate_representations(x, table_small)) == oracle_windows(x)


@pytest.mark.parametrize("x", [4, 100, 5000, 12345])
def test_distinct_values_match_oracle(x, table_small):
    assert values_up_to(x, table_small) == oracle_distinct_values(x)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

@given(st.integers(min_value=1, max_value=10**6))
def test_count_report_internal_consistency(table_small, x):
    report = count_sums(x, table_small)
    assert report.distinct_count <= report.multiplicity_count
    assert sum(report.per_length.values()) == report.multiplicity_count
    assert report.per_length[1] == prime_count(isqrt(x), table_small)
    counts = [report.per_length[m] for m in sorted(report.per_length)]
    assert all(a >= b for a, b in zip(counts, counts[1:]))  # longer is rarer
    if report.max_length_seen:
        assert report.max_length_seen == max(report.per_length)
        assert report.max_length_seen == max_window_length(x, table_small)


@given(st.integers(min_value=1, max_value=10**6))
def test_per_length_agrees_with_count_windows(table_small, x):
    report = count_sums(x, table_small)
    for m, c in report.per_length.items():
        assert count_windows(x, m, table_small) == c
    beyond = report.max_length_seen + 1
    assert count_windows(x, beyond, table_small) == 0


@given(st.integers(min_value=1, max_value=50_000))
@settings(max_examples=50)
def test_every_enumerated_window_re_verifies(table_small, x):
    seen = []
    for rep in enumerate_representations(x, table_small):
        i = rep.start_index - 1
        run = table_small.primes[i : i + rep.length]
        assert len(run) == rep.length
        assert sum(int(p) ** 2 for p in run) == rep.value
        assert rep.value <= x
        seen.append((rep.length, rep.start_index))
    assert seen == sorted(set(seen))  # canonical (length, start) order, no dupes


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=50)
def test_values_are_sorted_distinct_and_findable(table_small, x):
    values = values_up_to(x, table_small)
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values == sorted({r.value for r in enumerate_representations(x, table_small)})
    report = count_sums(x, table_small)
    assert len(values) == report.distinct_count
    for v in values[:3] + values[-3:]:
        reps = find_representations(v, table_small)
        assert reps and all(r.value == v for r in reps)


@given(st.integers(min_value=1, max_value=40_000))
@settings(max_examples=40)
def test_counts_match_oracle(table_small, x):
    oracle = oracle_windows(x)
    report = count_sums(x, table_small)
    assert report.multiplicity_count == len(oracle)
    assert report.distinct_count == len({v for _, _, v in oracle})


@given(st.integers(min_value=4, max_value=10**6))
@settings(max_examples=50)
def test_monotone_in_x(table_small, x):
    lo = count_sums(x - 1, table_small)
    hi = count_sums(x, table_small)
    assert lo.distinct_count <= hi.distinct_count
    assert lo.multiplicity_count <= hi.multiplicity_count
    gained = hi.multiplicity_count - lo.multiplicity_count
    assert gained == len(find_representations(x, table_small))
