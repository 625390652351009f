"""
Text codec for grids.
One row per line, cells separated by single spaces; tokens L, S, V and densities.
"""

import re

from .cells import LOAD, SUPPORT, VOID, Cell, CellKind, Difficulty, Grid
from .exceptions import BadToken, EmptyGrid, OutOfRange, RaggedRows

NUMERIC_TOKEN = re.compile(r"^[+-]?(?:\d+(?:\.\d*)?|\.\d+)$")
HARD_LITERAL = re.compile(r"^(?:[01](?:\.0)?|0\.\d)$")
EASY_LITERAL = re.compile(r"^[01](?:\.0)?$")

MARKER_TOKENS = {"L": LOAD, "S": SUPPORT, "V": VOID}


def _parse_token(token, difficulty, strict, position):
    marker = MARKER_TOKENS.get(token)
    if marker is not None:
        return marker

    if not NUMERIC_TOKEN.match(token):
        raise BadToken(f"Unrecognized symbol '{token}' at {position}", token=token)

    value = float(token)
    if not strict:
        return Cell.unchecked(value)
    if not 0.0 <= value <= 1.0:
        raise OutOfRange(f"Value {token} at {position} outside [0, 1]", token=token)

    literal = EASY_LITERAL if difficulty is Difficulty.EASY else HARD_LITERAL
    if not literal.match(token.lstrip("+")):
        raise BadToken(
            f"Value '{token}' at {position} is not admissible for {difficulty.value} grids",
            token=token,
        )
    return Cell.value(value)


def parse_grid(text, difficulty=Difficulty.EASY, *, strict=True):
    """
    Parse the space-separated grid format.

    Args:
        text: Multi-line grid text; blank lines are skipped.
        difficulty: Controls which numeric literals are admissible.
        strict: When False, numeric tokens are kept as-is without range or
            literal checks so raw completions can be scored before clamping.

    Returns:
        Grid: the parsed grid.

    Raises:
        EmptyGrid, RaggedRows, BadToken, OutOfRange
    """
    difficulty = Difficulty.parse(difficulty)
    if text is None or not text.strip():
        raise EmptyGrid("Grid text is empty")

    lines = [line.split() for line in text.strip().splitlines() if line.strip()]
    width = len(lines[0])
    for index, tokens in enumerate(lines):
        if len(tokens) != width:
            raise RaggedRows(f"Row {index} has {len(tokens)} cells, expected {width}")

    rows = [
        [_parse_token(token, difficulty, strict, (i, j)) for j, token in enumerate(tokens)]
        for i, tokens in enumerate(lines)
    ]
    return Grid.from_rows(rows)


def render_token(cell: Cell, difficulty=Difficulty.EASY):
    if cell.kind is not CellKind.VALUE:
        return cell.kind.value
    if difficulty is Difficulty.HARD:
        return f"{cell.density:.1f}"
    if cell.density in (0.0, 1.0):
        return str(int(cell.density))
    return f"{cell.density:.1f}"


def render_grid(grid: Grid, difficulty=Difficulty.EASY):
    difficulty = Difficulty.parse(difficulty)
    return "\n".join(
        " ".join(render_token(cell, difficulty) for cell in row) for row in grid.to_rows()
    )
