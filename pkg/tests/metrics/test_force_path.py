import numpy as np
import pytest

from apps.grids.cells import DOWN, LOAD, SUPPORT, GravityVector, Grid
from apps.metrics.config import ForcePathConfig, MetricConfig
from apps.metrics.exceptions import MetricError, NoLoads
from apps.metrics.force_path import force_path_cost, fpceff, load_path_cost, move_weight

from .helpers import grid

COLUMN = "0 L 0/0 1 0/0 S 0"


@pytest.mark.parametrize(
    "move, weight",
    [((1, 0), 1.0), ((1, 1), 1.5), ((1, -1), 1.5), ((0, 1), 1.5), ((-1, 0), None), ((-1, 1), None)],
)
def test_move_weights_under_downward_gravity(move, weight):
    assert move_weight(move, DOWN, MetricConfig()) == weight


def test_move_weights_follow_gravity():
    left = GravityVector(0, -1)

    assert move_weight((0, -1), left, MetricConfig()) == 1.0
    assert move_weight((0, 1), left, MetricConfig()) is None


def test_column_cost():
    assert force_path_cost(grid(COLUMN)) == pytest.approx(2.15)


@pytest.mark.parametrize(
    "gt, prediction, expected",
    [
        (COLUMN, COLUMN, 1.0),
        (COLUMN, "0 L 0/1 1 0/0 S 0", 1.0),
        ("0 0 L/0 1 0/S 0 0", "0 1 L/1 0 0/S 0 0", 3.225 / 4.175),
        ("0 L 0/0 1 0/S 0 0", "0 L 0/1 1 0/S 0 0", 1.0),
    ],
)
def test_fpceff(gt, prediction, expected):
    assert fpceff(grid(prediction), grid(gt)) == pytest.approx(expected, abs=1e-4)


def test_cheaper_prediction_is_clipped_unless_disabled():
    gt, prediction = grid("0 L 0/0 1 0/S 0 0"), grid("0 L 0/1 0 0/S 0 0")

    assert force_path_cost(gt) == pytest.approx(2.7)
    assert force_path_cost(prediction) == pytest.approx(2.675)
    assert fpceff(prediction, gt) == 1.0
    assert fpceff(prediction, gt, cfg=MetricConfig(clip_fpceff=False)) == pytest.approx(2.7 / 2.675)


def test_unsupported_load_costs_cmax():
    cfg = MetricConfig(cmax=100.0)
    broken = grid("0 L 0/0 0 0/0 S 0")

    assert load_path_cost(broken, (0, 1), cfg=cfg) == 100.0
    assert fpceff(broken, grid(COLUMN), cfg=cfg) == pytest.approx(2.15 / 100.0)


def test_cost_is_the_mean_over_loads():
    g = grid("L L 0/1 0 0/S 0 0")

    assert force_path_cost(g) == pytest.approx((2.15 + 1.5 * 1.05 + 1.1) / 2)


def test_prediction_without_loads():
    with pytest.raises(NoLoads):
        fpceff(grid("0 1 0/0 1 0/0 S 0"), grid(COLUMN))


def test_invalid_force_path_config():
    with pytest.raises(MetricError):
        ForcePathConfig(angle_thresholds=(15, 45), angle_costs=(1.0, 1.2))
    with pytest.raises(MetricError):
        ForcePathConfig(angle_costs=(1.0, 0.5, 1.5, 3.0))
    with pytest.raises(MetricError):
        MetricConfig(cmax=0)


# Weights for downward gravity with the default buckets.
ORACLE_WEIGHTS = {(1, 0): 1.0, (1, 1): 1.5, (1, -1): 1.5, (0, 1): 1.5, (0, -1): 1.5}


def brute_force_cost(g, load, cmax):
    """Cheapest simple path by exhaustive search."""
    solid = g.solid_mask()
    supports = set(g.supports())
    best = cmax

    def walk(node, cost, seen):
        nonlocal best
        if cost >= best:
            return
        if node in supports:
            best = cost
            return
        for (di, dj), weight in ORACLE_WEIGHTS.items():
            ni, nj = node[0] + di, node[1] + dj
            if g.in_bounds(ni, nj) and solid[ni, nj] and (ni, nj) not in seen:
                step = weight * (1.0 + 0.05 * (ni - load[0]))
                walk((ni, nj), cost + step, seen | {(ni, nj)})

    walk(load, 0.0, {load})
    return best


def random_grid(rng):
    rows, cols = rng.integers(2, 5, size=2)
    values = (rng.random((rows, cols)) < 0.55).astype(float)
    positions = [(i, j) for i in range(rows) for j in range(cols)]
    picks = rng.permutation(len(positions))[: 2 + rng.integers(0, 3)]
    markers = {positions[picks[0]]: LOAD, positions[picks[1]]: SUPPORT}
    for index in picks[2:]:
        markers[positions[index]] = LOAD if rng.random() < 0.5 else SUPPORT
    return Grid.from_densities(values, markers)


def test_shortest_paths_match_exhaustive_search():
    rng = np.random.default_rng(2024)
    cfg = MetricConfig()

    for _ in range(200):
        g = random_grid(rng)
        expected = np.mean([brute_force_cost(g, load, cfg.cmax) for load in g.loads()])
        assert force_path_cost(g, DOWN, cfg) == pytest.approx(expected)
