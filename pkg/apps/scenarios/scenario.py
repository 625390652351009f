"""
Boundary-condition scenarios.
Loads sit on the top row and supports on the bottom row of the unrotated frame.
"""

from dataclasses import dataclass

from apps.grids.cells import DOWN, GravityVector

from .exceptions import ScenarioError


@dataclass(frozen=True)
class Span:
    start: int
    width: int

    def __post_init__(self):
        if self.start < 0 or self.width < 1:
            raise ScenarioError(f"Invalid span start={self.start} width={self.width}")

    @property
    def stop(self):
        return self.start + self.width

    def columns(self):
        return range(self.start, self.stop)

    def to_list(self):
        return [self.start, self.width]


@dataclass(frozen=True)
class Scenario:
    index: int
    load_span: Span
    support_span: Span
    rows: int = 10
    cols: int = 10
    rotation: int = 0
    gravity: GravityVector = DOWN

    def __post_init__(self):
        if self.rows < 3 or self.cols < 1:
            raise ScenarioError(f"Domain {self.rows}x{self.cols} too small")
        for name, span in (("load", self.load_span), ("support", self.support_span)):
            if span.stop > self.cols:
                raise ScenarioError(
                    f"{name} span {span.to_list()} does not fit {self.cols} columns"
                )

    @property
    def id(self):
        return f"{self.index:03d}"

    def load_cells(self):
        return [(0, j) for j in self.load_span.columns()]

    def support_cells(self):
        return [(self.rows - 1, j) for j in self.support_span.columns()]

    def is_mirror_symmetric(self):
        def centred(span):
            return 2 * span.start + span.width == self.cols

        return centred(self.load_span) and centred(self.support_span)

    def to_dict(self):
        return {
            "index": self.index,
            "rows": self.rows,
            "cols": self.cols,
            "load_span": self.load_span.to_list(),
            "support_span": self.support_span.to_list(),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            index=int(data["index"]),
            load_span=Span(*data["load_span"]),
            support_span=Span(*data["support_span"]),
            rows=int(data.get("rows", 10)),
            cols=int(data.get("cols", 10)),
        )
