"""
Metric reports: full evaluation of one completion against its instance.
"""

import logging
from dataclasses import asdict, dataclass, field

from apps.forge.completions import parse_completion
from apps.grids.cells import Grid

from .config import MetricConfig
from .difficulty import difficulty_map
from .exceptions import NoLoads, ZeroMass
from .force_path import fpceff
from .reconstruction import diff_ratios, exact_match, weighted_ratios
from .topology import check_connectivity, isolated_clusters, valid_grid

logger = logging.getLogger(__name__)

# Flat record names, in table order.
RECORD_FIELDS = {
    "exact_match": "EM",
    "diff_ratio": "DiffRatio",
    "rel_diff_ratio": "RelDiffRatio",
    "pen_diff_ratio": "PenDiffRatio",
    "dw_diff_ratio": "DWDiffRatio",
    "dw_rel_diff_ratio": "DWRelDiffRatio",
    "dwcs": "DWCS",
    "valid_grid": "ValidGrid",
    "ls_conn": "LSConn",
    "dir_ls_conn": "DirLSConn",
    "islands": "N_islands",
    "fpceff": "FPCEff",
}
METRIC_COLUMNS = tuple(RECORD_FIELDS.values())


@dataclass
class MetricReport:
    """Absent (None) values are excluded from aggregate denominators."""

    instance_id: str = ""
    subject: str = ""
    difficulty: str = ""
    parsed: bool = False
    exact_match: bool = False
    valid_grid: bool = False
    diff_ratio: float | None = None
    rel_diff_ratio: float | None = None
    pen_diff_ratio: float | None = None
    dw_diff_ratio: float | None = None
    dw_rel_diff_ratio: float | None = None
    dwcs: float | None = None
    ls_conn: bool | None = None
    dir_ls_conn: bool | None = None
    islands: int | None = None
    fpceff: float | None = None
    flags: list = field(default_factory=list)

    def to_record(self):
        record = {"id": self.instance_id, "subject": self.subject, "difficulty": self.difficulty}
        record.update({name: getattr(self, attr) for attr, name in RECORD_FIELDS.items()})
        record["parsed"] = self.parsed
        record["flags"] = list(self.flags)
        return record

    @classmethod
    def from_record(cls, record):
        values = {attr: record.get(name) for attr, name in RECORD_FIELDS.items()}
        values["exact_match"] = bool(values["exact_match"])
        values["valid_grid"] = bool(values["valid_grid"])
        return cls(
            instance_id=record.get("id", ""),
            subject=record.get("subject", ""),
            difficulty=record.get("difficulty", ""),
            parsed=bool(record.get("parsed", values["valid_grid"])),
            flags=list(record.get("flags", [])),
            **values,
        )

    def as_dict(self):
        return asdict(self)


def evaluate(instance, completion, cfg: MetricConfig | None = None):
    """
    Score a completion against an instance's ground truth.

    Args:
        instance: TaskInstance being answered.
        completion: Parsed Grid, ParseFailure, or raw completion text.
        cfg: Metric parameters.

    Returns:
        MetricReport. Never raises for bad completions.
    """
    cfg = cfg or MetricConfig()
    if isinstance(completion, str):
        completion = parse_completion(completion, instance)

    gt = instance.ground_truth
    report = MetricReport(
        instance_id=instance.id,
        subject=instance.subject.slug,
        difficulty=instance.difficulty.value,
    )

    weights = difficulty_map(instance, cfg.difficulty_strategy)
    if len(weights):
        report.dwcs = weights.mean
    else:
        report.dwcs = 0.0
        report.flags.append("empty_mask")

    if not isinstance(completion, Grid):
        report.flags.append("parse_failure")
        return report

    report.parsed = True
    report.valid_grid = valid_grid(completion, gt, instance.difficulty)
    report.exact_match = exact_match(completion, gt)

    if completion.shape == gt.shape:
        try:
            ratios = diff_ratios(completion, gt, cfg)
            report.diff_ratio, report.rel_diff_ratio, report.pen_diff_ratio = ratios
            report.dw_diff_ratio, report.dw_rel_diff_ratio = weighted_ratios(
                completion, gt, weights, cfg
            )
        except ZeroMass:
            report.flags.append("zero_mass")
    else:
        report.flags.append("shape_mismatch")

    threshold = cfg.connectivity_solid_threshold
    connectivity = check_connectivity(completion, False, instance.gravity, threshold)
    report.ls_conn = connectivity.connected
    if connectivity.reason:
        report.flags.append(connectivity.reason)
    report.dir_ls_conn = check_connectivity(
        completion, True, instance.gravity, threshold
    ).connected
    report.islands = isolated_clusters(completion, threshold)

    try:
        report.fpceff = fpceff(completion, gt, instance.gravity, cfg)
    except NoLoads:
        if gt.loads():
            report.fpceff = 0.0
        else:
            logger.warning("Ground truth of %s has no loads; FPCEff left absent", instance.id)
            report.flags.append("gt_no_loads")
    return report
