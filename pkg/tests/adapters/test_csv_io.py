from __future__ import annotations

import pytest

from aft_sim.adapters.csv_io.default import (
    CsvDecisionSink,
    format_cell,
    load_samples_csv,
    parse_samples_csv,
    render_decisions_csv,
    render_sweep_csv,
)
from aft_sim.application.simnet.engine import run
from aft_sim.domain.errors import InvalidFormat, NotFound, ParseError
from aft_sim.domain.metric import Symbol
from aft_sim.domain.scenario import Metrics, NodeSpec, WorkloadOp
from tests.support import make_scenario


@pytest.mark.parametrize(
    ("value", "cell"),
    [
        (1 / 3, "0.33333333333333331"),
        (2.0, "2"),
        (-7, "-7"),
        (False, "false"),
        (float("inf"), "inf"),
        (Symbol("up"), "up"),
        ((0.5, 1e-20), "(0.5 9.9999999999999995e-21)"),
    ],
)
def test_cells_are_canonical(value, cell: str) -> None:
    assert format_cell(value) == cell


def test_decision_table_is_byte_stable() -> None:
    scenario = make_scenario([NodeSpec(i, 0.0) for i in range(3)], [WorkloadOp.write(0.1), WorkloadOp.read()])
    table = render_decisions_csv(run(scenario).decisions)
    assert table == (
        "request_index,kind,committed,learned_value,reference_value,abs_error,match_size,aggregate_alpha,messages\n"
        "0,write,true,0.10000000000000001,0.10000000000000001,0,3,1,6\n"
        "1,read,true,0.10000000000000001,0.10000000000000001,0,3,1,6\n"
    )
    assert "\r" not in table


def test_sweep_table_names_its_axis() -> None:
    metrics = Metrics(2, 1, 0.5, 0.0, 0.0, 6, 5, 1, 3)
    assert render_sweep_csv("drop_prob", [(0.25, metrics)]) == (
        "drop_prob,requests,committed,commit_rate,mean_abs_error,max_abs_error,messages_sent,"
        "messages_delivered,messages_dropped,replication_factor,detection_precision,detection_recall\n"
        "0.25,2,1,0.5,0,0,6,5,1,3,,\n"
    )


def test_sink_writes_lf_only(tmp_path) -> None:
    scenario = make_scenario([NodeSpec(i, 0.0) for i in range(3)], [WorkloadOp.read()])
    sink = CsvDecisionSink(tmp_path / "nested" / "run.csv")
    sink.write(run(scenario).decisions)
    raw = sink.path.read_bytes()
    assert raw.count(b"\n") == 2
    assert b"\r\n" not in raw


def test_samples_skip_header_and_blank_lines() -> None:
    samples = parse_samples_csv("x,y\n\n1.5,2\n3,4\n")
    assert samples.pairs == ((1.5, 2), (3, 4))


def test_samples_need_a_header_row() -> None:
    with pytest.raises(ParseError) as caught:
        parse_samples_csv("\n1,2\n3,4\n")
    assert (caught.value.line, caught.value.column) == (2, 1)
    assert "expected a header row" in caught.value.reason


def test_header_needs_two_columns() -> None:
    with pytest.raises(ParseError, match="expected 2 columns, got 3"):
        parse_samples_csv("x,y,z\n1,2\n3,4\n")


def test_symbol_samples_are_accepted() -> None:
    samples = parse_samples_csv("label,truth\non,on\noff,on\n")
    assert samples.pairs == ((Symbol("on"), Symbol("on")), (Symbol("off"), Symbol("on")))


def test_wrong_column_count_reports_the_line() -> None:
    with pytest.raises(ParseError) as caught:
        parse_samples_csv("x,y\n1,2\n3,4,5\n")
    assert str(caught.value) == "line 3, column 1: expected 2 columns, got 3"


def test_sample_files(tmp_path) -> None:
    good = tmp_path / "pairs.csv"
    good.write_text("fahrenheit,celsius\n212,100\n32,0\n", encoding="utf-8")
    assert load_samples_csv(good).count == 2
    with pytest.raises(NotFound):
        load_samples_csv(tmp_path / "missing.csv")
    binary = tmp_path / "binary.csv"
    binary.write_bytes(b"\xff\xfe\x00x,y\n")
    with pytest.raises(InvalidFormat):
        load_samples_csv(binary)
