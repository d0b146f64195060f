"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: the rewriting
closure explores word moves directly, the hom-count oracle enumerates
all assignments, and the brick oracle re-scans the word. They stay dumb
so the fast implementations can be checked against them.
"""

from __future__ import annotations

import random
from itertools import product

import pytest

from braidforge.words import BraidWord


def rewriting_class(w: BraidWord) -> frozenset[tuple[int, ...]]:
    """All words reachable by braid relations and far commutativity."""
    seen = {w.letters}
    frontier = [w.letters]
    while frontier:
        letters = frontier.pop()
        n = len(letters)
        for p in range(n - 2):
            a, b, c = letters[p], letters[p + 1], letters[p + 2]
            if a == c and abs(a - b) == 1:
                nxt = letters[:p] + (b, a, b) + letters[p + 3 :]
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        for p in range(n - 1):
            if abs(letters[p] - letters[p + 1]) >= 2:
                nxt = (
                    letters[:p]
                    + (letters[p + 1], letters[p])
                    + letters[p + 2 :]
                )
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return frozenset(seen)


def conjugacy_word_class(w: BraidWord) -> frozenset[tuple[int, ...]]:
    """Closure under braid relations, far commutativity and rotations."""
    seen = {w.letters}
    frontier = [w.letters]
    while frontier:
        letters = frontier.pop()
        candidates = []
        n = len(letters)
        for p in range(n - 2):
            a, b, c = letters[p], letters[p + 1], letters[p + 2]
            if a == c and abs(a - b) == 1:
                candidates.append(letters[:p] + (b, a, b) + letters[p + 3 :])
        for p in range(n - 1):
            if abs(letters[p] - letters[p + 1]) >= 2:
                candidates.append(
                    letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2 :]
                )
        if n:
            candidates.append(letters[1:] + letters[:1])
            candidates.append(letters[-1:] + letters[:-1])
        for nxt in candidates:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def brute_hom_count(relator_words, k: int, target) -> int:
    """Exhaustive |T|^k assignment count; k must stay tiny."""
    count = 0
    for images in product(range(target.size), repeat=k):
        ok = True
        for word in relator_words:
            acc = target.identity
            for x in word:
                g = images[abs(x) - 1]
                acc = target.mul(acc, g if x > 0 else target.inv(g))
            if acc != target.identity:
                ok = False
                break
        if ok:
            count += 1
    return count


def brick_pairs_oracle(w: BraidWord) -> list[tuple[int, int, int]]:
    """(column, lo, hi) triples by direct scan of consecutive occurrences."""
    out = []
    for column in range(1, w.strands):
        occ = [p for p, i in enumerate(w.letters, start=1) if i == column]
        out.extend((column, occ[t], occ[t + 1]) for t in range(len(occ) - 1))
    return out


def linked_oracle(w: BraidWord, b1, b2) -> bool:
    """Direct alternation/nesting predicate on two bricks."""
    if b1.column == b2.column:
        return b1.hi == b2.lo or b2.hi == b1.lo
    if abs(b1.column - b2.column) != 1:
        return False
    p, q, r, s = b1.lo, b1.hi, b2.lo, b2.hi
    return (p < r < q < s) or (r < p < s < q)


def random_word(rng: random.Random, max_strands: int = 4, max_len: int = 12) -> BraidWord:
    n = rng.randint(2, max_strands)
    length = rng.randint(1, max_len)
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240809)
