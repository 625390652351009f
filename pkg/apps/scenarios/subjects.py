"""
The eight masking subjects: 1/5/10 random cells, 1/3 random rows, 1/3 random columns, full.
"""

from dataclasses import dataclass
from enum import Enum

from .exceptions import ScenarioError


class SubjectKind(str, Enum):
    CELLS = "cells"
    ROWS = "rows"
    COLUMNS = "columns"
    FULL = "full"


ALLOWED_COUNTS = {
    SubjectKind.CELLS: (1, 5, 10),
    SubjectKind.ROWS: (1, 3),
    SubjectKind.COLUMNS: (1, 3),
    SubjectKind.FULL: (None,),
}

LABEL_NOUNS = {
    SubjectKind.CELLS: ("Cell", "Cells"),
    SubjectKind.ROWS: ("Row", "Rows"),
    SubjectKind.COLUMNS: ("Column", "Columns"),
}


@dataclass(frozen=True)
class Subject:
    kind: SubjectKind
    n: int | None = None

    def __post_init__(self):
        if self.n not in ALLOWED_COUNTS[self.kind]:
            raise ScenarioError(f"Unsupported subject {self.kind.value} with n={self.n}")

    @property
    def slug(self):
        return self.kind.value if self.n is None else f"{self.kind.value}{self.n}"

    @property
    def label(self):
        if self.kind is SubjectKind.FULL:
            return "Full"
        singular, plural = LABEL_NOUNS[self.kind]
        return f"{self.n} Random {singular if self.n == 1 else plural}"

    @classmethod
    def parse(cls, slug):
        slug = str(slug).strip().lower()
        for subject in SUBJECTS:
            if subject.slug == slug:
                return subject
        raise ScenarioError(
            f"Unknown subject '{slug}'. Expected one of: {', '.join(SUBJECT_SLUGS)}"
        )

    def __str__(self):
        return self.slug


SUBJECTS = (
    Subject(SubjectKind.CELLS, 1),
    Subject(SubjectKind.CELLS, 5),
    Subject(SubjectKind.CELLS, 10),
    Subject(SubjectKind.ROWS, 1),
    Subject(SubjectKind.ROWS, 3),
    Subject(SubjectKind.COLUMNS, 1),
    Subject(SubjectKind.COLUMNS, 3),
    Subject(SubjectKind.FULL),
)
SUBJECT_SLUGS = tuple(subject.slug for subject in SUBJECTS)
