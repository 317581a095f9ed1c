"""Round-trip and formatting guarantees for the three output forms."""

import json

import pytest

from cpsq import (
    BoundReport,
    CountReport,
    DusartCheck,
    Representation,
    WindowCap,
    count_sums,
    record_from_dict,
    record_to_dict,
    serialize_report,
)
from cpsq.serialize import to_csv, to_json, to_text

SAMPLE_BOUND = BoundReport(
    label="count-upper/distinct",
    x_or_m=5000,
    lhs=91.0,
    rhs=184.17441970297375,
    observed=91,
    applicable=True,
    verdict="pass",
)

SAMPLE_CAP = WindowCap(x=5000, analytic_m=19, exact_m=12, alpha=None)

SAMPLE_DUSART = DusartCheck(
    n=17,
    lower_value=6.000254498632439,
    pi_value=7,
    upper_value=7.531519421633577,
    lower_applicable=True,
    upper_applicable=True,
    passed=True,
)


def test_json_round_trip_bound_report():
    data = json.loads(to_json([SAMPLE_BOUND]))[0]
    assert record_from_dict(BoundReport, data) == SAMPLE_BOUND


def test_json_round_trip_preserves_float_precision():
    data = json.loads(to_json([SAMPLE_BOUND]))[0]
    assert data["rhs"] == 184.17441970297375  # full precision, not %.6g


def test_json_round_trip_count_report(table_small):
    report = count_sums(5000, table_small)
    data = json.loads(to_json([report]))[0]
    assert set(data["per_length"].keys()) == {str(m) for m in report.per_length}
    assert record_from_dict(CountReport, data) == report


def test_json_round_trip_remaining_records():
    rep = Representation(start_index=7, length=4, value=2020)
    assert record_from_dict(Representation, json.loads(to_json([rep]))[0]) == rep
    assert record_from_dict(WindowCap, json.loads(to_json([SAMPLE_CAP]))[0]) == SAMPLE_CAP
    assert (
        record_from_dict(DusartCheck, json.loads(to_json([SAMPLE_DUSART]))[0])
        == SAMPLE_DUSART
    )


def test_record_to_dict_rejects_non_records():
    with pytest.raises(TypeError):
        record_to_dict({"not": "a record"})


def test_csv_header_and_cells():
    out = to_csv([SAMPLE_BOUND])
    lines = out.strip().split("\n")
    assert lines[0] == "label,x_or_m,lhs,rhs,observed,applicable,verdict"
    assert lines[1] == "count-upper/distinct,5000,91,184.174,91,true,pass"


def test_csv_none_becomes_empty_cell():
    report = BoundReport(
        label="partial-sum[alpha=0.5]",
        x_or_m=4,
        lhs=2.7844570503761732,
        rhs=3.0,
        observed=None,
        applicable=True,
        verdict="pass",
    )
    line = to_csv([report]).strip().split("\n")[1]
    assert line == "partial-sum[alpha=0.5],4,2.78446,3,,true,pass"


def test_csv_per_length_cell_uses_semicolons(table_small):
    report = count_sums(50, table_small)
    line = to_csv([report]).strip().split("\n")[1]
    assert "1:4;2:2;3:1" in line


def test_csv_requires_single_record_type():
    with pytest.raises(ValueError, match="single type"):
        to_csv([SAMPLE_BOUND, SAMPLE_CAP])


def test_csv_empty_is_empty_string():
    assert to_csv([]) == ""


def test_text_bound_report_line():
    assert to_text([SAMPLE_BOUND]) == (
        "count-upper/distinct         at 5000: 91 vs 184.174 observed=91 -> pass"
    )


def test_text_flags_inapplicable_reports():
    report = BoundReport(
        label="dusart-lower",
        x_or_m=16,
        lhs=5.770780163555856,
        rhs=6.0,
        observed=6,
        applicable=False,
        verdict="inconclusive",
    )
    assert to_text([report]).endswith("-> inconclusive (not applicable)")


def test_text_window_cap_line():
    assert to_text([SAMPLE_CAP]) == "x=5000 analytic_m=19 exact_m=12"


def test_serialize_report_dispatch_and_unknown_format():
    assert serialize_report([], "json") == "[]"
    assert serialize_report([], "text") == ""
    with pytest.raises(ValueError, match="unknown format"):
        serialize_report([SAMPLE_BOUND], "yaml")
