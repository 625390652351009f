import numpy as np
import pytest

from apps.forge.exceptions import NotEnoughMaskable
from apps.forge.masking import apply_mask
from apps.grids.codec import parse_grid
from apps.grids.exceptions import VoidPresent
from apps.scenarios.subjects import Subject

GT = parse_grid(
    """
    L L 0 0
    1 1 0 0
    0 1 1 0
    0 0 1 0
    0 0 S S
    """
)


def mask_for(slug, seed=0):
    return apply_mask(GT, Subject.parse(slug), np.random.default_rng(seed))


@pytest.mark.parametrize("slug, size", [("cells1", 1), ("cells5", 5), ("cells10", 10)])
def test_cell_subjects_mask_exactly_n_non_marker_cells(slug, size):
    masked, mask = mask_for(slug)

    assert len(mask) == size
    assert not any(GT[p].is_marker for p in mask)
    assert set(masked.voids()) == mask


def test_row_subjects_take_whole_marker_free_rows():
    _, one = mask_for("rows1")
    _, three = mask_for("rows3")

    assert len({i for i, _ in one}) == 1 and len(one) == 4
    assert three == {(i, j) for i in (1, 2, 3) for j in range(4)}


def test_single_column_prefers_marker_free_columns():
    _, mask = mask_for("columns1")

    assert mask == {(i, 2) for i in range(5)}


def test_three_columns_fall_back_to_non_marker_cells():
    _, mask = mask_for("columns3")

    assert len({j for _, j in mask}) == 3
    assert not any(GT[p].is_marker for p in mask)


def test_full_masks_every_marker_free_row():
    masked, mask = mask_for("full")

    assert mask == {(i, j) for i in (1, 2, 3) for j in range(4)}
    assert masked.loads() == GT.loads()
    assert masked.supports() == GT.supports()


def test_masking_is_driven_by_the_generator():
    assert mask_for("cells5", seed=3) == mask_for("cells5", seed=3)


def test_void_ground_truth_is_rejected():
    with pytest.raises(VoidPresent):
        apply_mask(GT.with_void([(1, 1)]), Subject.parse("cells1"), np.random.default_rng(0))


def test_not_enough_maskable_cells():
    tiny = parse_grid("L 0\n0 S")
    with pytest.raises(NotEnoughMaskable):
        apply_mask(tiny, Subject.parse("cells10"), np.random.default_rng(0))
    with pytest.raises(NotEnoughMaskable):
        apply_mask(tiny, Subject.parse("full"), np.random.default_rng(0))
