import pytest

from apps.grids.cells import Difficulty
from apps.scenarios.builder import build_dataset, build_scenario, instance_id, mask_rng
from apps.scenarios.enumeration import edge_placements, enumerate_scenarios
from apps.scenarios.exceptions import (
    DatasetBuildError,
    DatasetUnavailable,
    EmptyEnumeration,
    InstanceNotFound,
    ScenarioError,
)
from apps.scenarios.records import (
    get_instance,
    instance_from_record,
    instance_to_record,
    load_dataset,
    read_dataset,
    write_dataset,
)
from apps.scenarios.subjects import SUBJECT_SLUGS, SUBJECTS, Subject
from apps.solver.config import SolverConfig
from apps.solver.exceptions import SingularSystem

from ..factories import ScenarioFactory


def test_default_enumeration_has_81_scenarios():
    scenarios = enumerate_scenarios()

    assert len(edge_placements(10, (3, 4, 5, 6))) == 26
    assert len(scenarios) == 81
    assert [s.index for s in scenarios] == list(range(81))
    assert len({(s.load_span, s.support_span) for s in scenarios}) == 81


def test_width_three_every_start_gives_64_scenarios():
    assert len(enumerate_scenarios(widths=(3,), stride=1)) == 64


def test_scenarios_put_loads_on_top_and_supports_on_bottom():
    for scenario in enumerate_scenarios():
        assert all(i == 0 for i, _ in scenario.load_cells())
        assert all(i == scenario.rows - 1 for i, _ in scenario.support_cells())
        assert 3 <= scenario.load_span.width <= 6


@pytest.mark.parametrize(
    "kwargs, error",
    [
        ({"widths": (2,)}, ScenarioError),
        ({"widths": (7,)}, ScenarioError),
        ({"widths": ()}, ScenarioError),
        ({"stride": 0}, ScenarioError),
        ({"cols": 2, "widths": (3,)}, EmptyEnumeration),
    ],
)
def test_invalid_enumeration(kwargs, error):
    with pytest.raises(error):
        enumerate_scenarios(**kwargs)


def test_subject_slugs():
    assert SUBJECT_SLUGS == (
        "cells1", "cells5", "cells10", "rows1", "rows3", "columns1", "columns3", "full"
    )
    assert Subject.parse("ROWS3").label == "3 Random Rows"
    with pytest.raises(ScenarioError):
        Subject.parse("rows2")


def test_small_dataset_cardinality(small_dataset, small_scenarios):
    assert len(small_dataset) == len(small_scenarios) * len(SUBJECTS) * 2
    assert [i.id for i in small_dataset] == sorted(i.id for i in small_dataset)


def test_instance_ids(small_dataset):
    instance = small_dataset[0]
    assert instance.id == instance_id(instance.scenario, instance.subject, instance.difficulty)
    expected = f"{instance.scenario.id}-{instance.subject.slug}-{instance.difficulty.value}"
    assert instance.id == expected


def test_masks_match_their_subject(small_dataset):
    for instance in small_dataset:
        subject = instance.subject
        rows = {i for i, _ in instance.mask}
        columns = {j for _, j in instance.mask}
        assert not any(instance.ground_truth[p].is_marker for p in instance.mask)
        if subject.kind.value == "cells":
            assert len(instance.mask) == subject.n
        elif subject.kind.value == "rows":
            assert len(rows) == subject.n
            assert len(instance.mask) == subject.n * instance.input.cols
        elif subject.kind.value == "columns":
            assert len(columns) == subject.n
        else:
            assert rows == set(range(1, instance.input.rows - 1))


def test_easy_and_hard_share_scenario_ground_truth(small_dataset):
    by_id = {i.id: i for i in small_dataset}
    for instance in small_dataset:
        if instance.difficulty is Difficulty.EASY:
            hard = by_id[instance.id.replace("-easy", "-hard")]
            easy_values = instance.ground_truth.density_array(fill=-1)
            hard_values = hard.ground_truth.density_array(fill=-1)
            assert ((hard_values >= 0.5) == (easy_values == 1.0)).all()


def test_mask_rng_is_keyed_by_coordinates():
    subject = SUBJECTS[1]
    first = mask_rng(0, 4, subject, Difficulty.EASY).integers(0, 1_000_000, 5)
    again = mask_rng(0, 4, subject, Difficulty.EASY).integers(0, 1_000_000, 5)
    other = mask_rng(0, 4, subject, Difficulty.HARD).integers(0, 1_000_000, 5)

    assert first.tolist() == again.tolist()
    assert first.tolist() != other.tolist()


def test_generation_is_byte_identical_across_runs(small_scenarios, small_dataset, tmp_path):
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_dataset(first, small_dataset)
    write_dataset(second, build_dataset(small_scenarios, seed=0))

    assert first.read_bytes() == second.read_bytes()


def test_seed_changes_masks_not_ground_truths(small_scenarios, small_dataset):
    reseeded = build_dataset(small_scenarios[:1], seed=7)
    original = {i.id: i for i in small_dataset}

    assert all(i.ground_truth == original[i.id].ground_truth for i in reseeded)
    assert any(i.mask != original[i.id].mask for i in reseeded)


def test_records_round_trip(small_dataset, small_dataset_path):
    assert read_dataset(small_dataset_path) == small_dataset
    record = instance_to_record(small_dataset[0])
    assert set(record) == {
        "id",
        "subject",
        "difficulty",
        "rotation",
        "gravity",
        "input_grid",
        "gt_grid",
        "mask_cells",
        "scenario",
    }
    assert instance_from_record(record) == small_dataset[0]


def test_record_missing_field():
    with pytest.raises(ScenarioError, match="gt_grid"):
        instance_from_record({"id": "x", "subject": "cells1", "difficulty": "easy",
                              "input_grid": "L 0\n0 S", "mask_cells": []})


def test_get_instance(small_dataset):
    assert get_instance(small_dataset, small_dataset[3].id) is small_dataset[3]
    with pytest.raises(InstanceNotFound):
        get_instance(small_dataset, "999-cells1-easy")


def test_load_dataset_caches_and_reports_missing_file(small_dataset_path, tmp_path):
    assert load_dataset(small_dataset_path) is load_dataset(small_dataset_path)
    with pytest.raises(DatasetUnavailable):
        load_dataset(tmp_path / "missing.jsonl")


def test_failed_scenario_is_reported_with_its_id(monkeypatch):
    def fail(scenario, cfg):
        raise SingularSystem("no supports")

    monkeypatch.setattr("apps.scenarios.builder.optimize", fail)

    with pytest.raises(DatasetBuildError) as excinfo:
        build_scenario(ScenarioFactory(index=12), SolverConfig())
    assert excinfo.value.scenario_id == "012"


def test_build_dataset_needs_scenarios():
    with pytest.raises(ScenarioError):
        build_dataset([])


@pytest.mark.slow
def test_full_dataset_has_1296_instances_and_is_worker_independent(tmp_path):
    scenarios = enumerate_scenarios()
    serial = build_dataset(scenarios, seed=0)
    parallel = build_dataset(scenarios, seed=0, workers=2)

    assert len(serial) == 1296
    assert serial == parallel
