"""
Shared fixtures: a small generated dataset, completion backends and an isolated cache.
"""

import numpy as np
import pytest

from apps.grids.cells import Cell, Difficulty
from apps.grids.codec import render_grid
from apps.harness.runner import BenchmarkRunner
from apps.scenarios.builder import build_dataset
from apps.scenarios.enumeration import enumerate_scenarios
from apps.scenarios.records import write_dataset

SMALL_WIDTHS = (3,)
SMALL_STRIDE = 3


class EchoBackend:
    """Answers every prompt with the ground truth of the instance it was rendered for."""

    def __init__(self, jobs):
        self.answers = {
            prompt: render_grid(instance.ground_truth, instance.difficulty)
            for instance, prompt in jobs
        }
        self.calls = 0

    def complete(self, prompt):
        self.calls += 1
        return self.answers[prompt]


class NoiseBackend:
    """
    Returns the ground truth with each masked cell flipped with probability p.

    Draws are fixed per instance, so a larger p flips a superset of cells.
    """

    def __init__(self, jobs, p, seed=0):
        self.p = p
        self.instances = {prompt: instance for instance, prompt in jobs}
        self.seed = seed

    def complete(self, prompt):
        instance = self.instances[prompt]
        gt = instance.ground_truth
        rng = np.random.default_rng([self.seed, sum(ord(c) for c in instance.id)])
        draws = rng.random(len(instance.mask))
        updates = {}
        for position, draw in zip(instance.sorted_mask, draws):
            if draw < self.p:
                updates[position] = Cell.value(1.0 - gt[position].density)
        return render_grid(gt.replace(updates), instance.difficulty)


class FailingBackend:
    def complete(self, prompt):
        raise RuntimeError("backend unavailable")


@pytest.fixture(scope="session")
def small_scenarios():
    return enumerate_scenarios(widths=SMALL_WIDTHS, stride=SMALL_STRIDE)


@pytest.fixture(scope="session")
def small_dataset(small_scenarios):
    return build_dataset(small_scenarios, seed=0)


@pytest.fixture(scope="session")
def small_dataset_path(small_dataset, tmp_path_factory):
    path = tmp_path_factory.mktemp("dataset") / "dataset.jsonl"
    write_dataset(path, small_dataset)
    return path


@pytest.fixture
def easy_cells_instance(small_dataset):
    return next(
        i for i in small_dataset if i.subject.slug == "cells5" and i.difficulty is Difficulty.EASY
    )


@pytest.fixture
def echo_backend_for():
    def factory(spec, dataset):
        return EchoBackend(BenchmarkRunner(spec, backend=None).prepare(dataset))

    return factory


@pytest.fixture
def noise_backend_for():
    def factory(spec, dataset, p):
        return NoiseBackend(BenchmarkRunner(spec, backend=None).prepare(dataset), p)

    return factory


@pytest.fixture
def failing_backend():
    return FailingBackend()


@pytest.fixture
def completion_cache_dir(settings, tmp_path):
    """Point the completions cache at a fresh directory."""
    location = tmp_path / "completions"
    settings.CACHES = {
        **settings.CACHES,
        "completions": {
            "BACKEND": "django.core.cache.backends.filebased.FileBasedCache",
            "LOCATION": str(location),
            "TIMEOUT": None,
        },
    }
    return location


@pytest.fixture
def dataset_settings(settings, small_dataset_path, tmp_path):
    settings.LOADPATH_DATASET_PATH = str(small_dataset_path)
    settings.LOADPATH_RUNS_DIR = str(tmp_path / "runs")
    settings.LOADPATH_RUN_CONFIG = ""
    settings.LOADPATH_API_TOKEN = ""
    return settings
