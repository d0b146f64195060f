"""Brick diagrams of positive words.

A brick lives between two consecutive occurrences of the same letter
within a column. Bricks are numbered canonically: column-major
ascending, bottom to top within a column; ids are 1-based so they double
as presentation generator indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .words import BraidWord


@dataclass(frozen=True)
class Brick:
    """Rectangle between word positions lo < hi in one column.

    letters[lo] == letters[hi] == column and no occurrence of the column
    index lies strictly between them.
    """

    id: int
    column: int
    lo: int
    hi: int

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0


@dataclass(frozen=True)
class BrickDiagram:
    word: BraidWord
    bricks: tuple[Brick, ...]

    def by_column(self, column: int) -> tuple[Brick, ...]:
        """Bricks of one column, bottom to top."""
        return tuple(b for b in self.bricks if b.column == column)

    def brick(self, brick_id: int) -> Brick:
        return self.bricks[brick_id - 1]

    def column_rank(self, brick_id: int) -> tuple[int, int]:
        """(column, 1-based rank within that column) of a brick."""
        b = self.brick(brick_id)
        rank = sum(
            1 for c in self.bricks if c.column == b.column and c.lo <= b.lo
        )
        return b.column, rank

    def to_json(self) -> str:
        return json.dumps(
            {
                "word": {
                    "strands": self.word.strands,
                    "letters": list(self.word.letters),
                },
                "bricks": [
                    {"id": b.id, "column": b.column, "lo": b.lo, "hi": b.hi}
                    for b in self.bricks
                ],
            }
        )


def build_bricks(w: BraidWord) -> BrickDiagram:
    """One brick per adjacent pair of same-index crossings, in canonical order."""
    bricks = []
    next_id = 1
    for column in range(1, w.strands):
        occ = w.occurrences(column)
        for lo, hi in zip(occ, occ[1:]):
            bricks.append(Brick(next_id, column, lo, hi))
            next_id += 1
    return BrickDiagram(w, tuple(bricks))


def brick_count(w: BraidWord) -> int:
    return sum(max(0, len(w.occurrences(c)) - 1) for c in range(1, w.strands))
