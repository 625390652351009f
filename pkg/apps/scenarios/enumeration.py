"""
Scenario enumeration.

Placements per edge are listed lexicographically by (width, start) and every
`stride`-th one is kept; scenarios are the load x support product. On the
default 10-column domain with widths 3..6 there are 8 + 7 + 6 + 5 = 26
placements, stride 3 keeps 9 of them, giving 81 scenarios.
"""

from itertools import product

from .exceptions import EmptyEnumeration, ScenarioError
from .scenario import Scenario, Span

MIN_WIDTH = 3
MAX_WIDTH = 6


def edge_placements(cols, widths):
    return [
        (width, start) for width in sorted(set(widths)) for start in range(cols - width + 1)
    ]


def enumerate_scenarios(rows=10, cols=10, widths=(3, 4, 5, 6), stride=3):
    if not widths or any(not MIN_WIDTH <= w <= MAX_WIDTH for w in widths):
        raise ScenarioError(f"Widths must lie in [{MIN_WIDTH}, {MAX_WIDTH}], got {list(widths)}")
    if stride < 1:
        raise ScenarioError("stride must be >= 1")

    placements = edge_placements(cols, widths)[::stride]
    if not placements:
        raise EmptyEnumeration(f"No width in {sorted(widths)} fits {cols} columns")

    return [
        Scenario(
            index=index,
            load_span=Span(load_start, load_width),
            support_span=Span(support_start, support_width),
            rows=rows,
            cols=cols,
        )
        for index, ((load_width, load_start), (support_width, support_start)) in enumerate(
            product(placements, placements)
        )
    ]
