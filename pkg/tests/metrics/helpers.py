from apps.forge.instance import TaskInstance
from apps.grids.cells import Difficulty
from apps.grids.codec import parse_grid
from apps.scenarios.subjects import Subject


def grid(rows, difficulty="easy"):
    """Parse a grid written on one line with '/' between rows."""
    return parse_grid(rows.replace("/", "\n"), difficulty, strict=False)


def instance(gt_rows, mask, difficulty="easy", subject="cells1"):
    gt = grid(gt_rows, difficulty)
    mask = frozenset(mask)
    return TaskInstance(
        id="fixture",
        subject=Subject.parse(subject),
        difficulty=Difficulty.parse(difficulty),
        input=gt.with_void(mask),
        ground_truth=gt,
        mask=mask,
    )
