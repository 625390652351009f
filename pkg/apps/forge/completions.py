"""
Extraction of a predicted grid from raw model output.
"""

import re
from dataclasses import dataclass

from apps.grids.codec import parse_grid
from apps.grids.exceptions import GridError

TOKEN = r"(?:[A-Za-z]|[+-]?(?:\d+(?:\.\d*)?|\.\d+))"
GRID_LINE = re.compile(rf"^\s*{TOKEN}(?:[ \t]+{TOKEN})*\s*$")
FENCE = re.compile(r"^\s*```")


@dataclass(frozen=True)
class ParseFailure:
    reason: str
    raw: str = ""

    def __bool__(self):
        return False


def grid_blocks(raw):
    """Contiguous runs of grid-shaped lines; fences and blank lines end a run."""
    blocks, current = [], []
    for line in (raw or "").splitlines():
        if GRID_LINE.match(line) and not FENCE.match(line):
            current.append(line.strip())
            continue
        if current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def parse_completion(raw, instance=None):
    """
    Parse the last grid-shaped block of a completion.

    Numbers are kept as written so out-of-range predictions can still be
    scored; admissibility is judged later by valid_grid.

    Returns:
        Grid on success, ParseFailure otherwise. Never raises.
    """
    blocks = grid_blocks(raw)
    if not blocks:
        return ParseFailure("no grid found in completion", raw=raw or "")
    # Single-token prose lines ("OK") also look grid-shaped; prefer multi-column blocks.
    wide = [block for block in blocks if len(block[0].split()) > 1]
    block = (wide or blocks)[-1]
    difficulty = instance.difficulty if instance is not None else "easy"
    try:
        grid = parse_grid("\n".join(block), difficulty, strict=False)
    except GridError as e:
        return ParseFailure(str(e), raw=raw)
    return grid