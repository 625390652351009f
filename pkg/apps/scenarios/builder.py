"""
Dataset builder.
Optimizes each scenario once and derives one task instance per subject and difficulty.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import numpy as np

from apps.forge.exceptions import ForgeError
from apps.forge.instance import TaskInstance
from apps.forge.masking import apply_mask
from apps.grids.cells import Difficulty
from apps.solver.config import SolverConfig
from apps.solver.exceptions import SolverError
from apps.solver.optimizer import optimize

from .exceptions import DatasetBuildError, ScenarioError
from .subjects import SUBJECTS

logger = logging.getLogger(__name__)

DIFFICULTY_CODES = {Difficulty.EASY: 0, Difficulty.HARD: 1}


def mask_rng(seed, scenario_index, subject, difficulty):
    """Counter-based generator keyed by the instance coordinates alone."""
    key = [int(seed), int(scenario_index), SUBJECTS.index(subject), DIFFICULTY_CODES[difficulty]]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))


def instance_id(scenario, subject, difficulty):
    return f"{scenario.id}-{subject.slug}-{Difficulty.parse(difficulty).value}"


def build_scenario(scenario, cfg: SolverConfig, seed=0, subjects=SUBJECTS):
    try:
        hard, easy = optimize(scenario, cfg)
    except SolverError as e:
        raise DatasetBuildError(
            f"Scenario {scenario.id} failed to optimize: {e}", scenario_id=scenario.id
        ) from e

    instances = []
    for difficulty, gt in ((Difficulty.EASY, easy), (Difficulty.HARD, hard)):
        for subject in subjects:
            rng = mask_rng(seed, scenario.index, subject, difficulty)
            try:
                masked, mask = apply_mask(gt, subject, rng)
            except ForgeError as e:
                raise DatasetBuildError(
                    f"Scenario {scenario.id} cannot be masked for {subject.slug}: {e}",
                    scenario_id=scenario.id,
                ) from e
            instances.append(
                TaskInstance(
                    id=instance_id(scenario, subject, difficulty),
                    subject=subject,
                    difficulty=difficulty,
                    input=masked,
                    ground_truth=gt,
                    mask=mask,
                    rotation=scenario.rotation,
                    gravity=scenario.gravity,
                    scenario=scenario,
                )
            )
    logger.info("Built scenario %s (%d instances)", scenario.id, len(instances))
    return instances


def build_dataset(scenarios, cfg: SolverConfig | None = None, seed=0, workers=1, subjects=SUBJECTS):
    """
    Build every task instance for the given scenarios.

    Args:
        scenarios: Scenarios to optimize.
        cfg: Solver parameters.
        seed: Dataset seed for masking.
        workers: Process count; output does not depend on it.
        subjects: Subjects to derive, canonical order by default.

    Returns:
        list[TaskInstance] sorted by id.

    Raises:
        ScenarioError: no scenarios were given.
        DatasetBuildError: a scenario failed; carries scenario_id.
    """
    scenarios = list(scenarios)
    if not scenarios:
        raise ScenarioError("No scenarios to build")
    cfg = cfg or SolverConfig()
    job = partial(build_scenario, cfg=cfg, seed=seed, subjects=tuple(subjects))

    logger.info("Building dataset from %d scenarios with %d worker(s)", len(scenarios), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(job, scenarios))
    else:
        batches = [job(scenario) for scenario in scenarios]

    instances = sorted((i for batch in batches for i in batch), key=lambda i: i.id)
    logger.info("Dataset built: %d instances", len(instances))
    return instances
