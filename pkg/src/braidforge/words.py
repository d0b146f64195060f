"""Positive braid words and the elementary move calculus.

A word is a finite sequence of generator indices 1..N-1 on N strands,
stored left to right; position 1 is the leftmost letter and the end of
the sequence is the top of the braid. Moves are the positive braid
relation, far commutativity, elementary conjugation at either end, and
positive Markov (de)stabilization. All values are immutable.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum

from .errors import MoveError, WordError


class MoveKind(Enum):
    BRAID_REL = "braid"
    FAR_COMM = "farcomm"
    ELEM_CONJ_LEFT = "conjL"
    ELEM_CONJ_RIGHT = "conjR"
    MARKOV_STAB = "stab"
    MARKOV_DESTAB = "destab"


# Deterministic ordering used by enumerate_moves.
_KIND_ORDER = {kind: i for i, kind in enumerate(MoveKind)}


@dataclass(frozen=True)
class BraidWord:
    """A positive word over sigma_1..sigma_{N-1} with strand count N."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise WordError(f"strand count must be >= 2, got {self.strands}")
        for pos, i in enumerate(self.letters, start=1):
            if not 1 <= i <= self.strands - 1:
                raise WordError(
                    f"letter {i} at position {pos} out of range 1..{self.strands - 1}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return serialize_word(self)

    def letter(self, position: int) -> int:
        """The letter at a 1-based position."""
        if not 1 <= position <= len(self.letters):
            raise WordError(f"position {position} out of range")
        return self.letters[position - 1]

    def occurrences(self, column: int) -> tuple[int, ...]:
        """1-based positions of sigma_column, in increasing order."""
        return tuple(p for p, i in enumerate(self.letters, start=1) if i == column)

    def to_json(self) -> str:
        return json.dumps({"strands": self.strands, "letters": list(self.letters)})

    @classmethod
    def from_json(cls, text: str) -> BraidWord:
        data = json.loads(text)
        return cls(int(data["strands"]), tuple(int(i) for i in data["letters"]))


@dataclass(frozen=True)
class WordMove:
    """One elementary move, located by a 1-based position into the word."""

    kind: MoveKind
    position: int = 1


_TOKEN = re.compile(r"^(?:s|σ)?(\d+)$")


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace- or comma-separated indices, optionally 's'-prefixed.

    The strand count is max index + 1 unless given explicitly; an explicit
    count may exceed that (split links are allowed). Empty input requires
    an explicit count.
    """
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    letters = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise WordError(f"cannot parse letter {tok!r}")
        i = int(m.group(1))
        if i <= 0:
            raise WordError(f"generator index must be positive, got {i}")
        letters.append(i)
    if strands is None:
        if not letters:
            raise WordError("empty word needs an explicit strand count")
        strands = max(letters) + 1
    return BraidWord(strands, tuple(letters))


def serialize_word(w: BraidWord) -> str:
    """Inverse of parse_word: space-separated indices."""
    return " ".join(str(i) for i in w.letters)


def move_applies(w: BraidWord, m: WordMove) -> bool:
    """Whether the move is valid on this word at its position."""
    n, letters, p = len(w.letters), w.letters, m.position
    if m.kind is MoveKind.BRAID_REL:
        return (
            1 <= p <= n - 2
            and letters[p - 1] == letters[p + 1]
            and abs(letters[p - 1] - letters[p]) == 1
        )
    if m.kind is MoveKind.FAR_COMM:
        return 1 <= p <= n - 1 and abs(letters[p - 1] - letters[p]) >= 2
    if m.kind is MoveKind.ELEM_CONJ_LEFT:
        return n >= 1 and p == 1
    if m.kind is MoveKind.ELEM_CONJ_RIGHT:
        return n >= 1 and p == n
    if m.kind is MoveKind.MARKOV_STAB:
        return p == n + 1
    if m.kind is MoveKind.MARKOV_DESTAB:
        # Single trailing letter sigma_{N-1} that is its only occurrence;
        # destabilizing below two strands is not allowed.
        return (
            n >= 1
            and p == n
            and w.strands >= 3
            and letters[-1] == w.strands - 1
            and letters.count(w.strands - 1) == 1
        )
    raise MoveError(f"unknown move kind {m.kind}")


def apply_move(w: BraidWord, m: WordMove) -> BraidWord:
    """Apply a move; raises MoveError if it does not apply."""
    if not move_applies(w, m):
        raise MoveError(f"{m.kind.value} does not apply at position {m.position}")
    letters, p = w.letters, m.position
    if m.kind is MoveKind.BRAID_REL:
        i, j = letters[p - 1], letters[p]
        return BraidWord(w.strands, letters[: p - 1] + (j, i, j) + letters[p + 2 :])
    if m.kind is MoveKind.FAR_COMM:
        return BraidWord(
            w.strands,
            letters[: p - 1] + (letters[p], letters[p - 1]) + letters[p + 1 :],
        )
    if m.kind is MoveKind.ELEM_CONJ_LEFT:
        return BraidWord(w.strands, letters[1:] + letters[:1])
    if m.kind is MoveKind.ELEM_CONJ_RIGHT:
        return BraidWord(w.strands, letters[-1:] + letters[:-1])
    if m.kind is MoveKind.MARKOV_STAB:
        return BraidWord(w.strands + 1, letters + (w.strands,))
    if m.kind is MoveKind.MARKOV_DESTAB:
        return BraidWord(w.strands - 1, letters[:-1])
    raise MoveError(f"unknown move kind {m.kind}")


def inverse_move(w: BraidWord, m: WordMove) -> WordMove:
    """The move that undoes m; valid on apply_move(w, m)."""
    if not move_applies(w, m):
        raise MoveError(f"{m.kind.value} does not apply at position {m.position}")
    n = len(w.letters)
    if m.kind in (MoveKind.BRAID_REL, MoveKind.FAR_COMM):
        return m
    if m.kind is MoveKind.ELEM_CONJ_LEFT:
        return WordMove(MoveKind.ELEM_CONJ_RIGHT, n)
    if m.kind is MoveKind.ELEM_CONJ_RIGHT:
        return WordMove(MoveKind.ELEM_CONJ_LEFT, 1)
    if m.kind is MoveKind.MARKOV_STAB:
        return WordMove(MoveKind.MARKOV_DESTAB, n + 1)
    return WordMove(MoveKind.MARKOV_STAB, n)


def enumerate_moves(w: BraidWord) -> list[WordMove]:
    """All valid moves, ordered by kind then position."""
    n = len(w.letters)
    moves = []
    for p in range(1, n - 1):
        m = WordMove(MoveKind.BRAID_REL, p)
        if move_applies(w, m):
            moves.append(m)
    for p in range(1, n):
        m = WordMove(MoveKind.FAR_COMM, p)
        if move_applies(w, m):
            moves.append(m)
    if n >= 1:
        moves.append(WordMove(MoveKind.ELEM_CONJ_LEFT, 1))
        moves.append(WordMove(MoveKind.ELEM_CONJ_RIGHT, n))
    moves.append(WordMove(MoveKind.MARKOV_STAB, n + 1))
    destab = WordMove(MoveKind.MARKOV_DESTAB, n)
    if move_applies(w, destab):
        moves.append(destab)
    moves.sort(key=lambda m: (_KIND_ORDER[m.kind], m.position))
    return moves


def replay(w: BraidWord, moves: list[WordMove] | tuple[WordMove, ...]) -> BraidWord:
    """Apply a move sequence in order."""
    for m in moves:
        w = apply_move(w, m)
    return w
