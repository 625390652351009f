import pytest

from apps.harness.aggregate import AVERAGE, aggregate, render_table, table_to_json
from apps.harness.exceptions import EmptyGroup
from apps.harness.runner import RunRecord
from apps.metrics.report import METRIC_COLUMNS, MetricReport


def report(subject="cells1", difficulty="easy", **values):
    return MetricReport(
        instance_id=f"000-{subject}-{difficulty}", subject=subject, difficulty=difficulty, **values
    )


PERFECT = dict(
    parsed=True,
    exact_match=True,
    valid_grid=True,
    diff_ratio=1.0,
    rel_diff_ratio=1.0,
    pen_diff_ratio=1.0,
    dw_diff_ratio=1.0,
    dw_rel_diff_ratio=1.0,
    dwcs=2.0,
    ls_conn=True,
    dir_ls_conn=True,
    islands=0,
    fpceff=1.0,
)
HALF = {
    **PERFECT,
    "exact_match": False,
    "diff_ratio": 0.5,
    "ls_conn": False,
    "dir_ls_conn": False,
    "islands": 2,
    "fpceff": 0.5,
    "dwcs": 3.0,
}
UNPARSED = dict(dwcs=1.0, flags=["parse_failure"])


@pytest.fixture
def table():
    return aggregate(
        [
            report(**PERFECT),
            report(**HALF),
            report(**UNPARSED),
            report("rows1", **PERFECT),
            report("full", "hard", **UNPARSED),
        ]
    )


def test_subject_rows(table):
    cells = table[0]

    assert (cells.difficulty, cells.subject, cells.label, cells.count) == (
        "easy",
        "cells1",
        "1 Random Cell",
        3,
    )
    assert cells.values["EM"] == pytest.approx(100 / 3)
    assert cells.values["ValidGrid"] == pytest.approx(200 / 3)
    assert cells.values["DiffRatio"] == pytest.approx(75.0)
    assert cells.values["LSConn"] == pytest.approx(50.0)
    assert cells.values["N_islands"] == pytest.approx(1.0)
    assert cells.values["DWCS"] == pytest.approx(2.0)
    assert cells.values["FPCEff"] == pytest.approx(75.0)


def test_average_rows_are_means_of_subject_rows(table):
    assert [(row.difficulty, row.subject) for row in table] == [
        ("easy", "cells1"),
        ("easy", "rows1"),
        ("easy", AVERAGE),
        ("hard", "full"),
        ("hard", AVERAGE),
    ]
    average = table[2]
    assert average.count == 4
    assert average.values["EM"] == pytest.approx((100 / 3 + 100) / 2)
    assert average.values["DiffRatio"] == pytest.approx((75 + 100) / 2)


def test_absent_values(table):
    hard = table[3]

    assert hard.values["EM"] == 0.0
    assert hard.values["ValidGrid"] == 0.0
    assert hard.values["DiffRatio"] is None
    assert table[4].values["FPCEff"] is None


def test_render_table(table):
    lines = render_table(table).splitlines()

    assert lines[0].split()[:4] == ["Difficulty", "Subject", "n", "EM"]
    assert len(lines) == 6
    assert "1 Random Cell" in lines[1]
    assert "33.33" in lines[1]
    assert lines[4].startswith("Hard")
    assert " -" in lines[4]


def test_table_json(table):
    data = table_to_json(table)

    assert data["columns"] == list(METRIC_COLUMNS)
    assert data["rows"][0]["subject"] == "cells1"
    assert data["rows"][0]["count"] == 3


def test_accepts_run_records_and_dicts():
    flat = report(**PERFECT).to_record()
    record = RunRecord(instance_id="000-cells1-easy", prompt="p", report=flat)

    rows = aggregate([record, record.to_dict(), flat])

    assert rows[0].count == 3
    assert rows[0].values["EM"] == 100.0


def test_empty_and_unknown_groups():
    with pytest.raises(EmptyGroup):
        aggregate([])
    with pytest.raises(EmptyGroup, match="bogus"):
        aggregate([{"id": "bogus", "subject": "rows2", "difficulty": "easy", "EM": True}])
