"""
Stratified instance sampling.

sample_count is the run total. It is split as evenly as possible over the
selected (difficulty, subject) strata, earlier strata taking the remainder.
"""

import hashlib
import logging

import numpy as np

from apps.grids.cells import Difficulty
from apps.scenarios.subjects import SUBJECTS

from .exceptions import InsufficientInstances

logger = logging.getLogger(__name__)


def stratify(dataset, subjects=SUBJECTS, difficulties=tuple(Difficulty)):
    selected_subjects = set(subjects)
    selected_difficulties = set(difficulties)
    strata = {
        (difficulty, subject): []
        for difficulty in Difficulty
        if difficulty in selected_difficulties
        for subject in SUBJECTS
        if subject in selected_subjects
    }
    for instance in dataset:
        group = strata.get((instance.difficulty, instance.subject))
        if group is not None:
            group.append(instance)
    return strata


def stratum_rng(seed, difficulty, subject):
    """Generator keyed by (seed, difficulty, subject)."""
    digest = hashlib.sha256(f"{difficulty.value}/{subject.slug}".encode("utf-8")).digest()
    key = int.from_bytes(digest[:8], "big")
    return np.random.default_rng(np.random.SeedSequence([int(seed), key]))


def allocate(total, n_strata):
    base, extra = divmod(total, n_strata)
    return [base + 1 if index < extra else base for index in range(n_strata)]


def sample_instances(dataset, spec):
    """
    Seeded uniform sample per stratum, returned in id order.

    Raises:
        InsufficientInstances: a stratum holds fewer instances than its share.
    """
    strata = stratify(dataset, spec.subjects, spec.difficulties)
    if not strata:
        raise InsufficientInstances("No strata selected")

    sampled = []
    shares = allocate(spec.sample_count, len(strata))
    for ((difficulty, subject), group), share in zip(strata.items(), shares):
        if share > len(group):
            raise InsufficientInstances(
                f"Stratum {subject.slug}/{difficulty.value} has {len(group)} instances, "
                f"{share} requested",
                subject=subject.slug,
                difficulty=difficulty.value,
            )
        ordered = sorted(group, key=lambda instance: instance.id)
        rng = stratum_rng(spec.seed, difficulty, subject)
        picks = rng.choice(len(ordered), size=share, replace=False)
        sampled.extend(ordered[i] for i in picks)

    logger.info("Sampled %d instances over %d strata", len(sampled), len(strata))
    return sorted(sampled, key=lambda instance: instance.id)
