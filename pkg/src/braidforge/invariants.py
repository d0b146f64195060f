"""Presentation-level isomorphism invariants.

Abelianization is computed from the generator-by-relator exponent matrix
via an exact integer Smith normal form. Homomorphism counts into small
finite groups use pruned backtracking: braid and commutation relators
become per-pair compatibility bitmasks that are intersected as images
are assigned; longer relators are evaluated as soon as their support is
complete. Exceeding a configured generator cap raises, never guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ResourceCapError
from .finite_groups import FiniteTarget
from .presentations import GroupWord, Presentation, Relator, RelatorKind

DEFAULT_GENERATOR_CAPS = {"S3": 14, "S4": 10, "S5": 8, "*": 10}


@dataclass(frozen=True)
class Abelianization:
    """Invariant factors d1 | d2 | ... with 0 marking free factors."""

    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    def __str__(self) -> str:
        torsion = [d for d in self.invariant_factors if d > 1]
        parts = [f"Z/{d}" for d in torsion]
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " x ".join(parts) if parts else "1"


@dataclass(frozen=True)
class HomCount:
    target: str
    count: int


def smith_normal_form(
    matrix: list[list[int]], track_rows: bool = False
) -> tuple[list[int], list[list[int]] | None]:
    """Diagonal of the Smith normal form; optionally the row transform U.

    With track_rows, returns (diag, U) where U @ M @ V = D for some
    unimodular V; U suffices to test membership in the column lattice.
    """
    a = [row[:] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)] if track_rows else None

    def row_op(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        ai, aj = a[i], a[j]
        for c in range(cols):
            ai[c] -= q * aj[c]
        if u is not None:
            ui, uj = u[i], u[j]
            for c in range(rows):
                ui[c] -= q * uj[c]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    t = 0
    while t < rows and t < cols:
        # Pivot: smallest nonzero magnitude in the remaining block.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if a[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                for i2 in range(rows):
                    a[i2][j] -= q * a[i2][t]
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # Divisibility: pull a bad row up and redo this pivot.
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # row_t += row_bad
            continue
        t += 1
    diag = [abs(a[i][i]) for i in range(min(rows, cols))]
    return diag, u


def exponent_matrix(p: Presentation) -> list[list[int]]:
    """Rows = generators, columns = relators; entries are exponent sums."""
    mat = [[0] * len(p.relators) for _ in range(p.n_generators)]
    for j, r in enumerate(p.relators):
        for x in r.word:
            mat[abs(x) - 1][j] += 1 if x > 0 else -1
    return mat


def abelianization(p: Presentation) -> Abelianization:
    if p.n_generators == 0:
        return Abelianization(())
    if not p.relators:
        return Abelianization((0,) * p.n_generators)
    diag, _ = smith_normal_form(exponent_matrix(p))
    nonzero = sorted(d for d in diag if d != 0)
    factors = tuple(nonzero) + (0,) * (p.n_generators - len(nonzero))
    return Abelianization(factors)


def connected_components_abelian_rank(p: Presentation) -> int:
    """Rank of the free part of the abelianization."""
    return abelianization(p).rank


def in_column_lattice(matrix: list[list[int]], vector: list[int]) -> bool:
    """Exact test that vector lies in the integer span of matrix columns."""
    if all(v == 0 for v in vector):
        return True
    if not matrix or not matrix[0]:
        return False
    diag, u = smith_normal_form(matrix, track_rows=True)
    assert u is not None
    rows = len(matrix)
    uv = [sum(u[i][j] * vector[j] for j in range(rows)) for i in range(rows)]
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if uv[i] != 0:
                return False
        elif uv[i] % d != 0:
            return False
    return True


def _pair_kind(r: Relator) -> tuple[int, int, str] | None:
    """(i, j, 'braid'|'comm') if the relator is a standard pair relator."""
    if r.kind is RelatorKind.BRAID and len(r.lhs) == 3:
        i, j = r.lhs[0], r.lhs[1]
        return min(i, j), max(i, j), "braid"
    if r.kind is RelatorKind.COMM and len(r.lhs) == 2:
        i, j = r.lhs[0], r.lhs[1]
        return min(i, j), max(i, j), "comm"
    return None


def evaluate_word(t: FiniteTarget, images: dict[int, int] | list[int], word: GroupWord) -> int:
    """Image of a group word under generator images (1-based keys)."""
    acc = t.identity
    table = t.table
    inv = t.inverse
    if isinstance(images, dict):
        get = images.__getitem__
    else:
        get = lambda g: images[g - 1]  # noqa: E731
    for x in word:
        g = get(abs(x))
        acc = table[acc][g if x > 0 else inv[g]]
    return acc


def _compat_masks(t: FiniteTarget) -> tuple[list[int], list[int]]:
    n = t.size
    braid, comm = [], []
    for g in range(n):
        bm = cm = 0
        for h in range(n):
            gh = t.mul(g, h)
            hg = t.mul(h, g)
            if t.mul(gh, g) == t.mul(hg, h):
                bm |= 1 << h
            if gh == hg:
                cm |= 1 << h
        braid.append(bm)
        comm.append(cm)
    return braid, comm


_MASK_CACHE: dict[tuple[str, int], tuple[list[int], list[int]]] = {}


def _cached_masks(t: FiniteTarget) -> tuple[list[int], list[int]]:
    key = (t.name, t.size)
    if key not in _MASK_CACHE:
        _MASK_CACHE[key] = _compat_masks(t)
    return _MASK_CACHE[key]


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def generator_cap(t: FiniteTarget, caps: dict[str, int] | None = None) -> int:
    caps = caps or DEFAULT_GENERATOR_CAPS
    return caps.get(t.name, caps.get("*", DEFAULT_GENERATOR_CAPS["*"]))


def _assignments(
    p: Presentation, t: FiniteTarget, caps: dict[str, int] | None = None
) -> Iterator[tuple[int, ...]]:
    """All relator-satisfying generator images, as tuples indexed by generator."""
    k = p.n_generators
    cap = generator_cap(t, caps)
    if k > cap:
        raise ResourceCapError(
            f"{k} generators exceed the cap {cap} for target {t.name}"
        )
    if k == 0:
        yield ()
        return
    braid_mask, comm_mask = _cached_masks(t)
    full = (1 << t.size) - 1

    participation = [0] * (k + 1)
    pair: dict[tuple[int, int], str] = {}
    general: list[tuple[set[int], GroupWord]] = []
    for r in p.relators:
        pk = _pair_kind(r)
        if pk is not None:
            i, j, kind = pk
            pair[(i, j)] = kind
            participation[i] += 1
            participation[j] += 1
        else:
            support = {abs(x) for x in r.word}
            if not support:
                continue
            for g in support:
                participation[g] += len(r.word)
            general.append((support, r.word))

    order = sorted(range(1, k + 1), key=lambda g: (-participation[g], g))
    pos = {g: i for i, g in enumerate(order)}

    # pair_rel[step][earlier_step] = 'braid' | 'comm' | None
    pair_rel: list[list[str | None]] = [[None] * k for _ in range(k)]
    for (i, j), kind in pair.items():
        si, sj = pos[i], pos[j]
        lo, hi = min(si, sj), max(si, sj)
        pair_rel[hi][lo] = kind
    general_at: list[list[GroupWord]] = [[] for _ in range(k)]
    for support, word in general:
        last = max(pos[g] for g in support)
        general_at[last].append(word)

    images = [0] * (k + 1)  # 1-based by generator id
    table = t.table
    inv = t.inverse
    ident = t.identity

    def eval_general(word: GroupWord) -> int:
        acc = ident
        for x in word:
            g = images[abs(x)]
            acc = table[acc][g if x > 0 else inv[g]]
        return acc

    def dfs(step: int) -> Iterator[tuple[int, ...]]:
        if step == k:
            yield tuple(images[1 : k + 1])
            return
        g = order[step]
        allowed = full
        for earlier in range(step):
            rel = pair_rel[step][earlier]
            if rel is None:
                continue
            img = images[order[earlier]]
            allowed &= braid_mask[img] if rel == "braid" else comm_mask[img]
            if not allowed:
                return
        for val in _iter_bits(allowed):
            images[g] = val
            ok = True
            for word in general_at[step]:
                if eval_general(word) != ident:
                    ok = False
                    break
            if ok:
                yield from dfs(step + 1)

    yield from dfs(0)


def hom_count(
    p: Presentation, t: FiniteTarget, caps: dict[str, int] | None = None
) -> HomCount:
    """Exact number of homomorphisms into the target."""
    total = sum(1 for _ in _assignments(p, t, caps))
    return HomCount(t.name, total)


def enumerate_homs(
    p: Presentation, t: FiniteTarget, caps: dict[str, int] | None = None
) -> list[tuple[int, ...]]:
    return list(_assignments(p, t, caps))


def hom_count_up_to_conjugacy(
    p: Presentation, t: FiniteTarget, caps: dict[str, int] | None = None
) -> HomCount:
    """Number of homomorphisms up to simultaneous target conjugacy."""
    homs = set(enumerate_homs(p, t, caps))
    orbits = 0
    while homs:
        h = homs.pop()
        orbits += 1
        for c in range(t.size):
            ci = t.inv(c)
            conj = tuple(t.mul(t.mul(ci, x), c) for x in h)
            homs.discard(conj)
    return HomCount(t.name, orbits)
