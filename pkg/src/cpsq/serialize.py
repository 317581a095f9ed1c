"""Rendering of report records as text, JSON, or CSV.

The JSON form is lossless: field names match the dataclasses, floats keep
full round-trip precision, and ``record_from_dict`` reconstructs an equal
record. Text and CSV are for eyes and spreadsheets; reals are shortened to
6 significant digits there. All three forms are deterministic: fields stay
in declaration order and mappings keep their (ascending) insertion order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, fields, is_dataclass
from typing import Any, Iterable, Sequence

from .primes import DusartCheck
from .reports import BoundReport
from .windows import CountReport, Representation
from .bounds import WindowCap

FORMATS = ("text", "json", "csv")

Record = BoundReport | CountReport | Representation | WindowCap | DusartCheck


def _plain(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): v for k, v in value.items()}
    return value


def record_to_dict(record: Record) -> dict[str, Any]:
    """Field-order-preserving dict with JSON-safe keys."""
    if not is_dataclass(record):
        raise TypeError(f"not a report record: {record!r}")
    return {k: _plain(v) for k, v in asdict(record).items()}


def record_from_dict(cls: type, data: dict[str, Any]) -> Record:
    """Inverse of record_to_dict for a known record class."""
    kwargs = dict(data)
    for f in fields(cls):
        if f.name in kwargs and isinstance(kwargs[f.name], dict):
            kwargs[f.name] = {int(k): v for k, v in kwargs[f.name].items()}
    return cls(**kwargs)


def _cell(value: Any) -> str:
    """One CSV cell: %.6g reals, lowercase booleans, ; for mappings."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".6g")
    if isinstance(value, dict):
        return ";".join(f"{k}:{v}" for k, v in value.items())
    return str(value)


def to_json(records: Iterable[Record]) -> str:
    return json.dumps([record_to_dict(r) for r in records], indent=2)


def to_csv(records: Sequence[Record]) -> str:
    if not records:
        return ""
    first = type(records[0])
    if any(type(r) is not first for r in records):
        raise ValueError("CSV output needs records of a single type")
    names = [f.name for f in fields(first)]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(names)
    for r in records:
        writer.writerow([_cell(getattr(r, name)) for name in names])
    return out.getvalue()


def _text_line(record: Record) -> str:
    if isinstance(record, BoundReport):
        flag = "" if record.applicable else " (not applicable)"
        obs = "" if record.observed is None else f" observed={record.observed}"
        return (
            f"{record.label:<28} at {record.x_or_m}: "
            f"{record.lhs:.6g} vs {record.rhs:.6g}"
            f"{obs} -> {record.verdict}{flag}"
        )
    if isinstance(record, CountReport):
        lengths = ";".join(f"{m}:{c}" for m, c in record.per_length.items())
        return (
            f"x={record.x} distinct={record.distinct_count} "
            f"multiplicity={record.multiplicity_count} "
            f"max_length={record.max_length_seen} per_length={lengths}"
        )
    if isinstance(record, Representation):
        return (
            f"start_index={record.start_index} length={record.length} "
            f"value={record.value}"
        )
    if isinstance(record, WindowCap):
        alpha = "" if record.alpha is None else f" alpha={record.alpha:.6g}"
        return (
            f"x={record.x} analytic_m={record.analytic_m} "
            f"exact_m={record.exact_m}{alpha}"
        )
    if isinstance(record, DusartCheck):
        return (
            f"N={record.n} {record.lower_value:.6g} < pi={record.pi_value} "
            f"< {record.upper_value:.6g} "
            f"(lower from N>=17: {str(record.lower_applicable).lower()}) "
            f"passed={str(record.passed).lower()}"
        )
    raise TypeError(f"not a report record: {record!r}")


def to_text(records: Iterable[Record]) -> str:
    return "\n".join(_text_line(r) for r in records)


def serialize_report(records: Sequence[Record], fmt: str) -> str:
    """Render records in one of FORMATS; empty input gives '' / '[]'."""
    if fmt == "json":
        return to_json(records)
    if fmt == "csv":
        return to_csv(records)
    if fmt == "text":
        return to_text(records)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
