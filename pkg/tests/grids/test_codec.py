import pytest

from apps.grids.cells import LOAD, SUPPORT, VOID, Cell, Difficulty, Grid
from apps.grids.codec import parse_grid, render_grid
from apps.grids.exceptions import BadToken, EmptyGrid, OutOfRange, RaggedRows


def test_parse_easy_grid_with_markers():
    grid = parse_grid("L 0 1\nV 1 S", Difficulty.EASY)

    assert grid.shape == (2, 3)
    assert grid[0, 0] == LOAD
    assert grid[1, 2] == SUPPORT
    assert grid[1, 0] == VOID
    assert grid[0, 2] == Cell.value(1.0)
    assert grid.loads() == [(0, 0)]
    assert grid.supports() == [(1, 2)]
    assert grid.voids() == [(1, 0)]


def test_blank_lines_are_skipped():
    grid = parse_grid("\n0 1\n\n1 0\n\n")
    assert grid.shape == (2, 2)


@pytest.mark.parametrize("text", ["", "   ", None])
def test_empty_text(text):
    with pytest.raises(EmptyGrid):
        parse_grid(text)


def test_ragged_rows_are_rejected():
    with pytest.raises(RaggedRows):
        parse_grid("0 1 0\n1 0")


def test_unknown_symbol():
    with pytest.raises(BadToken) as excinfo:
        parse_grid("0 X\n1 0")
    assert excinfo.value.context["token"] == "X"


def test_out_of_range_value():
    with pytest.raises(OutOfRange):
        parse_grid("0 1.5\n1 0", Difficulty.HARD)


def test_fractional_value_not_admissible_for_easy():
    with pytest.raises(BadToken):
        parse_grid("0 0.5\n1 0", Difficulty.EASY)


def test_two_decimals_not_admissible_for_hard():
    with pytest.raises(BadToken):
        parse_grid("0 0.25\n1 0", Difficulty.HARD)


def test_lenient_parse_keeps_raw_values():
    grid = parse_grid("0 1.7\n-0.2 0.25", Difficulty.HARD, strict=False)

    assert grid[0, 1].density == pytest.approx(1.7)
    assert grid[1, 0].density == pytest.approx(-0.2)


def test_render_easy_and_hard():
    grid = Grid.from_densities([[0.0, 1.0], [1.0, 0.0]], markers={(0, 0): LOAD})

    assert render_grid(grid, Difficulty.EASY) == "L 1\n1 0"
    assert render_grid(grid, Difficulty.HARD) == "L 1.0\n1.0 0.0"


def test_render_then_parse_hard_grid():
    text = "L 0.3 0.0\n0.7 V 1.0\n0.1 0.0 S"
    assert render_grid(parse_grid(text, Difficulty.HARD), Difficulty.HARD) == text
