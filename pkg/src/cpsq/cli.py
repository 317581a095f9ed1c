"""Command line front end.

Subcommands: count, list, find, maxlen, verify, table-check. Results go to
stdout in text (default), JSON, or CSV; diagnostics go to stderr. Exit
codes: 0 success / all checks pass, 1 a bound check failed, 2 bad usage or
argument values, 3 a resource refusal (sieve request too large).

Sieved prime tables are cached on disk between invocations in the CPSQ1
binary format. The cache directory is, in order of precedence, the
CPSQ_CACHE_DIR environment variable, the --cache-dir option, then the
per-user cache location; tiny tables are not worth the file and are
recomputed instead.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from math import isqrt
from pathlib import Path

from .bounds import INFORMATIONAL_LABELS, analytic_max_window, full_verification
from .errors import ResourceLimitError
from .primes import DEFAULT_SEGMENT_ODDS, PrimeTable, load_table, save_table, sieve_primes
from .reference import REFERENCE_LIMIT, REFERENCE_VALUES
from .reports import FAIL
from .serialize import FORMATS, serialize_report
from .windows import count_sums, find_representations, values_up_to

CACHE_ENV = "CPSQ_CACHE_DIR"
CACHE_FILENAME = "primes.cpsq"

#: tables below this limit are cheaper to resieve than to cache
CACHE_MIN_LIMIT = 100_000

COUNT_MODES = ("distinct", "multiplicity", "both")


@dataclass(frozen=True)
class CliConfig:
    """One parsed invocation; exactly one command, defaults filled in."""

    command: str
    x_or_target: int | None = None
    format: str = "text"
    count_mode: str = "both"
    cache_dir: str | None = None
    grid: tuple[int, ...] | None = None
    segment_size: int | None = None


def _integer_arg(text: str) -> int:
    """Plain integers plus the 10^12 / 1e12 shorthands people type."""
    try:
        return int(text)
    except ValueError:
        pass
    m = re.fullmatch(r"(\d+)\^(\d+)", text)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    m = re.fullmatch(r"(\d+)e(\d+)", text)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _grid_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(_integer_arg(part) for part in text.split(",") if part)
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(
            f"grid must be comma-separated integers, got {text!r}"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpsq",
        description="Sums of squares of consecutive primes: "
        "enumeration, counting, and bound verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=FORMATS, default="text", help="output format"
    )
    common.add_argument(
        "--cache-dir", default=None, help="directory for the sieved prime cache"
    )
    common.add_argument(
        "--segment-size",
        type=_integer_arg,
        default=None,
        help=f"odd candidates per sieve segment (default {DEFAULT_SEGMENT_ODDS})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "count", parents=[common], help="count representable values <= x"
    )
    p.add_argument("x", type=_integer_arg)
    p.add_argument(
        "--count-mode",
        choices=COUNT_MODES,
        default="both",
        help="which count the text output reports",
    )

    p = sub.add_parser(
        "list", parents=[common], help="list distinct representable values <= x"
    )
    p.add_argument("x", type=_integer_arg)

    p = sub.add_parser(
        "find", parents=[common], help="find windows summing exactly to a target"
    )
    p.add_argument("target", type=_integer_arg)

    p = sub.add_parser(
        "maxlen", parents=[common], help="analytic and exact window-length caps at x"
    )
    p.add_argument("x", type=_integer_arg)

    p = sub.add_parser(
        "verify", parents=[common], help="run the full bound-verification battery"
    )
    p.add_argument(
        "--grid",
        type=_grid_arg,
        default=None,
        help="comma-separated x values (default: 289 and 1e3..1e9)",
    )

    sub.add_parser(
        "table-check",
        parents=[common],
        help=f"compare the enumeration below {REFERENCE_LIMIT} "
        "against the embedded reference list",
    )
    return parser


def parse_args(argv: list[str] | None = None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(
        command=ns.command,
        x_or_target=getattr(ns, "x", None) or getattr(ns, "target", None),
        format=ns.format,
        count_mode=getattr(ns, "count_mode", "both"),
        cache_dir=ns.cache_dir,
        grid=getattr(ns, "grid", None),
        segment_size=ns.segment_size,
    )


# ---------------------------------------------------------------------------
# prime-table provisioning with the on-disk cache
# ---------------------------------------------------------------------------

def _cache_dir(config: CliConfig) -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    if config.cache_dir:
        return Path(config.cache_dir)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "cpsq"


def provision_table(needed_limit: int, config: CliConfig) -> PrimeTable:
    """A table covering ``needed_limit``, via the cache when possible.

    A cached table whose limit is at least the needed one is reused as-is;
    anything smaller (or unreadable) is replaced by a fresh sieve, which is
    written back when big enough to be worth keeping.
    """
    path = _cache_dir(config) / CACHE_FILENAME
    if path.is_file():
        try:
            cached = load_table(path)
            if cached.limit >= needed_limit:
                return cached
        except ValueError as exc:
            print(f"warning: ignoring cache: {exc}", file=sys.stderr)
    segment = config.segment_size or DEFAULT_SEGMENT_ODDS
    table = sieve_primes(needed_limit, segment)
    if needed_limit >= CACHE_MIN_LIMIT:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            save_table(table, path)
        except OSError as exc:
            print(f"warning: could not write cache: {exc}", file=sys.stderr)
    return table


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def _cmd_count(config: CliConfig) -> int:
    x = config.x_or_target
    table = provision_table(isqrt(x), config)
    report = count_sums(x, table)
    if config.format == "text":
        if config.count_mode == "distinct":
            print(f"x={report.x} distinct={report.distinct_count}")
        elif config.count_mode == "multiplicity":
            print(f"x={report.x} multiplicity={report.multiplicity_count}")
        else:
            print(serialize_report([report], "text"))
    else:
        print(serialize_report([report], config.format))
    return 0


def _cmd_list(config: CliConfig) -> int:
    x = config.x_or_target
    table = provision_table(isqrt(x), config)
    values = values_up_to(x, table)
    if config.format == "json":
        print(json.dumps(values))
    elif config.format == "csv":
        print("value")
        for v in values:
            print(v)
    else:
        for v in values:
            print(v)
    return 0


def _cmd_find(config: CliConfig) -> int:
    target = config.x_or_target
    table = provision_table(isqrt(target), config)
    reps = find_representations(target, table)
    if config.format == "text":
        if not reps:
            print("no representation")
        for rep in reps:
            run = table.primes[rep.start_index - 1 : rep.start_index - 1 + rep.length]
            print(f"{target} = " + " + ".join(f"{int(p)}^2" for p in run))
    else:
        print(serialize_report(reps, config.format))
    return 0


def _cmd_maxlen(config: CliConfig) -> int:
    cap = analytic_max_window(config.x_or_target)
    print(serialize_report([cap], config.format))
    return 0


def _cmd_verify(config: CliConfig) -> int:
    grid = list(config.grid) if config.grid else None
    reports = full_verification(grid)
    failed = [
        r
        for r in reports
        if r.applicable and r.verdict == FAIL and r.label not in INFORMATIONAL_LABELS
    ]
    print(serialize_report(reports, config.format))
    if config.format == "text":
        print(
            f"{len(reports)} checks, {len(failed)} failures"
            + ("" if failed else " (all pass)")
        )
    return 1 if failed else 0


def _cmd_table_check(config: CliConfig) -> int:
    table = provision_table(isqrt(REFERENCE_LIMIT), config)
    computed = values_up_to(REFERENCE_LIMIT, table)
    expected = list(REFERENCE_VALUES)
    passed = computed == expected
    if config.format == "json":
        print(
            json.dumps(
                {
                    "passed": passed,
                    "expected_count": len(expected),
                    "computed_count": len(computed),
                }
            )
        )
    elif config.format == "csv":
        print("passed,expected_count,computed_count")
        print(f"{str(passed).lower()},{len(expected)},{len(computed)}")
    else:
        if passed:
            print(f"table-check: PASS ({len(expected)} values match)")
        else:
            diffs = [
                (i, e, c)
                for i, (e, c) in enumerate(zip(expected, computed))
                if e != c
            ]
            print(
                f"table-check: FAIL (expected {len(expected)} values, "
                f"computed {len(computed)}; first differences: {diffs[:5]})"
            )
    return 0 if passed else 1


_HANDLERS = {
    "count": _cmd_count,
    "list": _cmd_list,
    "find": _cmd_find,
    "maxlen": _cmd_maxlen,
    "verify": _cmd_verify,
    "table-check": _cmd_table_check,
}


def run(config: CliConfig) -> int:
    """Dispatch one parsed invocation and map failures to exit codes."""
    try:
        return _HANDLERS[config.command](config)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed usage/help; keep its exit code
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
