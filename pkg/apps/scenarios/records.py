"""
Dataset persistence as line-delimited JSON records.
"""

import os
import threading

from apps.forge.instance import TaskInstance
from apps.grids.cells import Difficulty, GravityVector
from apps.grids.codec import parse_grid, render_grid
from core.jsonl import read_jsonl, write_jsonl

from .exceptions import DatasetUnavailable, InstanceNotFound, ScenarioError
from .scenario import Scenario
from .subjects import Subject


def instance_to_record(instance: TaskInstance):
    record = {
        "id": instance.id,
        "subject": instance.subject.slug,
        "difficulty": instance.difficulty.value,
        "rotation": instance.rotation,
        "gravity": list(instance.gravity.as_tuple()),
        "input_grid": render_grid(instance.input, instance.difficulty),
        "gt_grid": render_grid(instance.ground_truth, instance.difficulty),
        "mask_cells": [list(position) for position in instance.sorted_mask],
    }
    if instance.scenario is not None:
        record["scenario"] = instance.scenario.to_dict()
    return record


def instance_from_record(record):
    try:
        difficulty = Difficulty.parse(record["difficulty"])
        scenario = record.get("scenario")
        return TaskInstance(
            id=record["id"],
            subject=Subject.parse(record["subject"]),
            difficulty=difficulty,
            input=parse_grid(record["input_grid"], difficulty),
            ground_truth=parse_grid(record["gt_grid"], difficulty),
            mask=frozenset(tuple(cell) for cell in record["mask_cells"]),
            rotation=int(record.get("rotation", 0)),
            gravity=GravityVector.from_sequence(record.get("gravity", (1, 0))),
            scenario=Scenario.from_dict(scenario) if scenario else None,
        )
    except KeyError as e:
        raise ScenarioError(f"Dataset record is missing field {e}") from e


def write_dataset(path, instances):
    """Write instances sorted by id; returns the record count."""
    ordered = sorted(instances, key=lambda instance: instance.id)
    return write_jsonl(path, (instance_to_record(instance) for instance in ordered))


def read_dataset(path):
    return [instance_from_record(record) for record in read_jsonl(path)]


def index_dataset(instances):
    return {instance.id: instance for instance in instances}


def get_instance(instances, instance_id):
    for instance in instances:
        if instance.id == instance_id:
            return instance
    raise InstanceNotFound(f"Instance '{instance_id}' not found", instance_id=instance_id)


_cache = {}
_cache_lock = threading.Lock()


def load_dataset(path):
    """Read a dataset once per file modification time."""
    try:
        mtime = os.path.getmtime(path)
    except OSError as e:
        raise DatasetUnavailable(f"Dataset {path} is not available", path=str(path)) from e
    key = (str(path), mtime)
    with _cache_lock:
        if key not in _cache:
            _cache.clear()
            _cache[key] = read_dataset(path)
        return _cache[key]
