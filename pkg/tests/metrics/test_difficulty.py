import pytest

from apps.metrics.difficulty import boundary_contrast, category_diversity, difficulty_map
from apps.metrics.exceptions import MetricError

from .helpers import grid, instance

COLUMN = "0 L 0/0 1 0/0 S 0"


def test_uniform_neighbourhood():
    weights = difficulty_map(instance(COLUMN, [(1, 1)]))

    assert weights.weights == {(1, 1): 2}
    assert weights.mean == 2.0


def test_mixed_neighbourhood():
    assert difficulty_map(instance(COLUMN, [(1, 0)])).mean == 3.0


def test_boundary_contrast_strategy():
    tall = instance("0 L 0/0 1 0/0 1 0/0 1 0/0 S 0", [(2, 2)])
    dense = instance("0 L L L 0/0 1 1 0 0/0 1 0 1 0/0 1 1 0 0/0 S S S 0", [(2, 2)])

    assert difficulty_map(tall, "boundary_contrast").mean == 1.0
    assert difficulty_map(dense, "boundary_contrast").mean == 3.0
    assert difficulty_map(tall).mean == 2.0


def test_weights_are_clamped():
    g = grid("0 L 0/0 1 0/0 S 0")

    assert category_diversity(g, (0, 0)) == 3
    assert boundary_contrast(g, (0, 0)) == 1
    assert boundary_contrast(grid("0 0/0 0"), (0, 0)) == 1


def test_empty_mask_has_no_mean():
    weights = difficulty_map(instance(COLUMN, []))

    assert len(weights) == 0
    assert weights.mean is None


def test_unknown_strategy():
    with pytest.raises(MetricError, match="Unknown difficulty strategy"):
        difficulty_map(instance(COLUMN, [(1, 1)]), "entropy")
