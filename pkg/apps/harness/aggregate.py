"""
Aggregation of metric reports into a subject x difficulty table.

Percent columns are means x 100. EM and ValidGrid count every record;
the other columns skip absent values, so parse failures only lower those two.
"""

from dataclasses import dataclass, field
from statistics import fmean

from apps.grids.cells import Difficulty
from apps.metrics.report import METRIC_COLUMNS, MetricReport
from apps.scenarios.subjects import SUBJECTS

from .exceptions import EmptyGroup
from .runner import RunRecord

PERCENT_COLUMNS = {
    "EM",
    "DiffRatio",
    "RelDiffRatio",
    "PenDiffRatio",
    "DWDiffRatio",
    "DWRelDiffRatio",
    "ValidGrid",
    "LSConn",
    "DirLSConn",
    "FPCEff",
}
ALWAYS_COUNTED = {"EM", "ValidGrid"}
AVERAGE = "Average"


@dataclass
class AggregateRow:
    difficulty: str
    subject: str
    label: str
    count: int
    values: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "difficulty": self.difficulty,
            "subject": self.subject,
            "label": self.label,
            "count": self.count,
            **self.values,
        }


def as_report_record(item):
    """Flat report dict from a MetricReport, RunRecord, RunRecord dict or flat record."""
    if isinstance(item, MetricReport):
        return item.to_record()
    if isinstance(item, RunRecord):
        return item.report
    if "report" in item and "prompt" in item:
        return item["report"]
    return item


def _column_value(records, column):
    values = []
    for record in records:
        value = record.get(column)
        if value is None:
            if column in ALWAYS_COUNTED:
                values.append(0.0)
            continue
        values.append(float(value))
    if not values:
        return None
    mean = fmean(values)
    return mean * 100 if column in PERCENT_COLUMNS else mean


def summarize(records):
    return {column: _column_value(records, column) for column in METRIC_COLUMNS}


def _average_row(difficulty, rows):
    values = {}
    for column in METRIC_COLUMNS:
        present = [row.values[column] for row in rows if row.values[column] is not None]
        values[column] = fmean(present) if present else None
    return AggregateRow(difficulty, AVERAGE, AVERAGE, sum(row.count for row in rows), values)


def aggregate(records):
    """
    Group reports by difficulty and subject, canonical order, with an Average row per difficulty.

    Raises:
        EmptyGroup: no records were given.
    """
    flat = [as_report_record(item) for item in records]
    if not flat:
        raise EmptyGroup("No records to aggregate")

    table = []
    for difficulty in Difficulty:
        rows = []
        for subject in SUBJECTS:
            group = [
                record
                for record in flat
                if record.get("difficulty") == difficulty.value
                and record.get("subject") == subject.slug
            ]
            if group:
                rows.append(
                    AggregateRow(
                        difficulty.value, subject.slug, subject.label, len(group), summarize(group)
                    )
                )
        if rows:
            table.extend(rows)
            table.append(_average_row(difficulty.value, rows))

    known = {(d.value, s.slug) for d in Difficulty for s in SUBJECTS}
    stray = [r for r in flat if (r.get("difficulty"), r.get("subject")) not in known]
    if stray:
        raise EmptyGroup(
            f"{len(stray)} record(s) have no known subject/difficulty, "
            f"e.g. id '{stray[0].get('id')}'"
        )
    return table


def _format(value):
    return "-" if value is None else f"{value:.2f}"


def render_table(table):
    header = ["Difficulty", "Subject", "n", *METRIC_COLUMNS]
    lines = [header]
    for row in table:
        lines.append(
            [row.difficulty.capitalize(), row.label, str(row.count)]
            + [_format(row.values[column]) for column in METRIC_COLUMNS]
        )
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    return "\n".join(
        "  ".join(
            cell.ljust(width) if i < 2 else cell.rjust(width)
            for i, (cell, width) in enumerate(zip(line, widths))
        ).rstrip()
        for line in lines
    )


def table_to_json(table):
    return {"columns": list(METRIC_COLUMNS), "rows": [row.to_dict() for row in table]}
