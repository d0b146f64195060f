"""Garside machinery: left normal form, cycling, summit sets, conjugacy.

Permutation braids are stored as image tuples (0-based strands); the
product p * q means "p then q", matching word concatenation. The left
normal form of a positive word is Delta^k p1 ... pl with each factor a
permutation braid that is neither trivial nor Delta, and every adjacent
pair left-weighted: the finishing set of p_i contains the starting set
of p_{i+1}. Two positive words represent the same braid exactly when
their normal forms coincide.

Conjugacy is decided through the super summit set: cycling raises the
Delta exponent to its conjugacy-class maximum (the summit power),
decycling lowers the canonical length, and the super summit set is the
closure of the converged representative under conjugation by the
nontrivial permutation braids. Conjugacy of positive words containing a
half twist is also *realized* as an explicit sequence of word moves:
braid relations, far commutativity and elementary conjugations only.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .errors import MoveError, ResourceCapError, StrandMismatchError
from .words import BraidWord, MoveKind, WordMove, apply_move, move_applies

Perm = tuple[int, ...]


# -- permutation braid primitives -------------------------------------------

def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def delta_perm(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def letter_perm(n: int, i: int) -> Perm:
    """The transposition of strands i, i+1 (letters are 1-based)."""
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_mul(p: Perm, q: Perm) -> Perm:
    """p then q."""
    return tuple(q[x] for x in p)


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_length(p: Perm) -> int:
    """Inversion count = positive word length of the permutation braid."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def starting_set(p: Perm) -> frozenset[int]:
    """Letters i with a reduced word for p beginning sigma_i."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def finishing_set(p: Perm) -> frozenset[int]:
    """Letters i with a reduced word for p ending sigma_i."""
    return starting_set(perm_inv(p))


def tau(p: Perm) -> Perm:
    """Conjugation by Delta: tau(sigma_i) = sigma_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


def tau_pow(p: Perm, k: int) -> Perm:
    return tau(p) if k % 2 else p


def left_complement(c: Perm) -> Perm:
    """c' with c' * c = Delta."""
    ci = perm_inv(c)
    w0 = delta_perm(len(c))
    return tuple(ci[w0[x]] for x in range(len(c)))


def right_complement(c: Perm) -> Perm:
    """c' with c * c' = Delta."""
    ci = perm_inv(c)
    w0 = delta_perm(len(c))
    return tuple(w0[ci[x]] for x in range(len(c)))


def perm_word(p: Perm) -> tuple[int, ...]:
    """A deterministic reduced positive word spelling the permutation braid."""
    q = list(p)
    word = []
    while True:
        descent = next((i for i in range(1, len(q)) if q[i - 1] > q[i]), None)
        if descent is None:
            break
        word.append(descent)
        q[descent - 1], q[descent] = q[descent], q[descent - 1]
    return tuple(word)


def delta_word(n: int) -> tuple[int, ...]:
    """The half twist (s1..s_{n-1})(s1..s_{n-2})...(s1)."""
    out: list[int] = []
    for top in range(n - 1, 0, -1):
        out.extend(range(1, top + 1))
    return tuple(out)


# -- normal forms ------------------------------------------------------------

@dataclass(frozen=True)
class NormalForm:
    """Left normal form Delta^k p1...pl; equal braids have equal forms."""

    strands: int
    delta_power: int
    factors: tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def key(self) -> tuple:
        return (self.strands, self.delta_power, self.factors)

    def to_json(self) -> str:
        return json.dumps(
            {
                "strands": self.strands,
                "k": self.delta_power,
                "factors": [[x + 1 for x in p] for p in self.factors],
            }
        )


def _normalize_factors(n: int, perms: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    """Left-weight a factor sequence; returns (extracted delta power, factors)."""
    ident = identity_perm(n)
    delta = delta_perm(n)
    factors = [p for p in perms if p != ident]
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            p, q = factors[j], factors[j + 1]
            if p == delta or q == ident:
                continue
            missing = starting_set(q) - finishing_set(p)
            while missing:
                i = min(missing)
                p = perm_mul(p, letter_perm(n, i))
                q = perm_mul(letter_perm(n, i), q)
                changed = True
                if q == ident or p == delta:
                    break
                missing = starting_set(q) - finishing_set(p)
            factors[j], factors[j + 1] = p, q
        if ident in factors:
            factors = [p for p in factors if p != ident]
    k = 0
    while factors and factors[0] == delta:
        k += 1
        factors.pop(0)
    return k, tuple(factors)


def normal_form(w: BraidWord) -> NormalForm:
    """Left normal form of a positive word."""
    n = w.strands
    perms = [letter_perm(n, i) for i in w.letters]
    k, factors = _normalize_factors(n, perms)
    return NormalForm(n, k, factors)


def is_left_weighted(nf: NormalForm) -> bool:
    n = nf.strands
    ident, delta = identity_perm(n), delta_perm(n)
    if any(p in (ident, delta) for p in nf.factors):
        return False
    return all(
        starting_set(nf.factors[i + 1]) <= finishing_set(nf.factors[i])
        for i in range(len(nf.factors) - 1)
    )


def nf_word(nf: NormalForm) -> BraidWord:
    """A positive word spelling the normal form; requires delta_power >= 0."""
    if nf.delta_power < 0:
        raise ValueError("cannot spell a braid with negative delta power positively")
    letters: list[int] = []
    for _ in range(nf.delta_power):
        letters.extend(delta_word(nf.strands))
    for p in nf.factors:
        letters.extend(perm_word(p))
    return BraidWord(nf.strands, tuple(letters))


def words_equal_as_braids(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")
    return normal_form(a) == normal_form(b)


# -- cycling / summit --------------------------------------------------------

@dataclass(frozen=True)
class GarsideCaps:
    """Search limits; exceeding one raises ResourceCapError."""

    summit_set: int = 100_000
    cycling: int | None = None  # default: word length x N^2
    word_search: int = 1_000_000

    def cycling_limit(self, word_length: int, strands: int) -> int:
        if self.cycling is not None:
            return self.cycling
        return max(64, word_length * strands * strands)


DEFAULT_CAPS = GarsideCaps()


@dataclass(frozen=True)
class SummitData:
    summit_power: int
    summit_set: frozenset[NormalForm]


def conjugate_nf(nf: NormalForm, c: Perm) -> NormalForm:
    """Normal form of c^-1 * beta * c for a permutation braid c."""
    n = nf.strands
    if c == identity_perm(n):
        return nf
    cprime = left_complement(c)  # c^-1 = Delta^-1 * c'
    seq = [tau_pow(cprime, nf.delta_power)] + list(nf.factors) + [c]
    d, factors = _normalize_factors(n, seq)
    return NormalForm(n, nf.delta_power - 1 + d, factors)


def cycling(nf: NormalForm) -> NormalForm:
    """Conjugate by the first factor (Delta-twisted); identity when l = 0."""
    if not nf.factors:
        return nf
    n = nf.strands
    x = tau_pow(nf.factors[0], nf.delta_power)
    d, factors = _normalize_factors(n, list(nf.factors[1:]) + [x])
    return NormalForm(n, nf.delta_power + d, factors)


def decycling(nf: NormalForm) -> NormalForm:
    """Conjugate by the inverse of the last factor; identity when l = 0."""
    if not nf.factors:
        return nf
    n = nf.strands
    seq = [tau_pow(nf.factors[-1], nf.delta_power)] + list(nf.factors[:-1])
    d, factors = _normalize_factors(n, seq)
    return NormalForm(n, nf.delta_power + d, factors)


def _summit_representative(
    nf: NormalForm, caps: GarsideCaps, budget_length: int | None = None
) -> tuple[NormalForm, list[str]]:
    """Converge to the super summit set; returns the committed operation log.

    Cycling is iterated until the Delta power stops improving over one
    orbit, then decycling until the canonical length stops improving;
    orbit repetition without improvement is the stopping criterion.
    """
    word_length = budget_length if budget_length is not None else (
        abs(nf.delta_power) * nf.strands * (nf.strands - 1) // 2
        + sum(perm_length(p) for p in nf.factors)
    )
    limit = caps.cycling_limit(max(word_length, 1), nf.strands)
    steps = 0
    ops: list[str] = []
    while True:
        improved = False
        for op, fn, better in (
            ("cycle", cycling, lambda a, b: a.delta_power > b.delta_power),
            ("decycle", decycling, lambda a, b: a.canonical_length < b.canonical_length),
        ):
            seen = {nf.key()}
            cur = nf
            trail: list[str] = []
            while True:
                steps += 1
                if steps > limit:
                    raise ResourceCapError(
                        f"cycling limit {limit} exceeded while converging"
                    )
                nxt = fn(cur)
                trail.append(op)
                if better(nxt, nf):
                    nf = nxt
                    ops.extend(trail)
                    improved = True
                    break
                if nxt.key() in seen:
                    break
                seen.add(nxt.key())
                cur = nxt
            if improved:
                break
        if not improved:
            return nf, ops


def _nontrivial_perms(n: int) -> list[Perm]:
    from itertools import permutations as iperm

    ident = identity_perm(n)
    return [p for p in iperm(range(n)) if p != ident]


def _summit_closure(
    rep: NormalForm, caps: GarsideCaps
) -> tuple[dict[tuple, NormalForm], dict[tuple, tuple[tuple, Perm] | None]]:
    """BFS closure of the super summit set, recording conjugating parents."""
    n = rep.strands
    simples = _nontrivial_perms(n)
    k_s, l_s = rep.delta_power, rep.canonical_length
    members = {rep.key(): rep}
    parents: dict[tuple, tuple[tuple, Perm] | None] = {rep.key(): None}
    queue = deque([rep])
    while queue:
        u = queue.popleft()
        for c in simples:
            v = conjugate_nf(u, c)
            if v.delta_power != k_s or v.canonical_length != l_s:
                continue
            if v.key() in members:
                continue
            if len(members) >= caps.summit_set:
                raise ResourceCapError(
                    f"summit set exceeded the cap {caps.summit_set}"
                )
            members[v.key()] = v
            parents[v.key()] = (u.key(), c)
            queue.append(v)
    return members, parents


def summit(nf: NormalForm, caps: GarsideCaps = DEFAULT_CAPS) -> SummitData:
    """Summit power and super summit set of the conjugacy class."""
    rep, _ = _summit_representative(nf, caps)
    members, _ = _summit_closure(rep, caps)
    return SummitData(rep.delta_power, frozenset(members.values()))


def are_conjugate(
    a: BraidWord, b: BraidWord, caps: GarsideCaps = DEFAULT_CAPS
) -> bool:
    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")
    if len(a.letters) != len(b.letters):
        return False  # conjugation preserves positive word length
    nfa, nfb = normal_form(a), normal_form(b)
    if nfa == nfb:
        return True
    rep_a, _ = _summit_representative(nfa, caps)
    rep_b, _ = _summit_representative(nfb, caps)
    if (rep_a.delta_power, rep_a.canonical_length) != (
        rep_b.delta_power,
        rep_b.canonical_length,
    ):
        return False
    members, _ = _summit_closure(rep_a, caps)
    return rep_b.key() in members


def contains_half_twist(w: BraidWord, caps: GarsideCaps = DEFAULT_CAPS) -> bool:
    """True iff the summit power is positive."""
    nf = normal_form(w)
    if nf.delta_power >= 1:
        return True
    rep, _ = _summit_representative(nf, caps, budget_length=len(w.letters))
    return rep.delta_power >= 1


# -- realizing conjugacy as word moves ---------------------------------------

@dataclass(frozen=True)
class MoveSequenceResult:
    moves: tuple[WordMove, ...]
    method: str  # "procedure-found" | "search-found"


def _word_move_neighbors(w: BraidWord, conjugations: bool) -> list[tuple[WordMove, BraidWord]]:
    out = []
    n = len(w.letters)
    for p in range(1, n - 1):
        m = WordMove(MoveKind.BRAID_REL, p)
        if move_applies(w, m):
            out.append((m, apply_move(w, m)))
    for p in range(1, n):
        m = WordMove(MoveKind.FAR_COMM, p)
        if move_applies(w, m):
            out.append((m, apply_move(w, m)))
    if conjugations and n >= 1:
        for m in (
            WordMove(MoveKind.ELEM_CONJ_LEFT, 1),
            WordMove(MoveKind.ELEM_CONJ_RIGHT, n),
        ):
            out.append((m, apply_move(w, m)))
    return out


def _bfs_moves(
    a: BraidWord, b: BraidWord, conjugations: bool, cap: int
) -> list[WordMove] | None:
    """Breadth-first search for a move path from a to b; None if capped out."""
    if a == b:
        return []
    start = a.letters
    goal = b.letters
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], WordMove] | None] = {
        start: None
    }
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for m, v in _word_move_neighbors(u, conjugations):
            if v.letters in parents:
                continue
            if len(parents) >= cap:
                return None
            parents[v.letters] = (u.letters, m)
            if v.letters == goal:
                moves = []
                cur = v.letters
                while parents[cur] is not None:
                    prev, mv = parents[cur]  # type: ignore[misc]
                    moves.append(mv)
                    cur = prev
                return list(reversed(moves))
            queue.append(v)
    return None


def _equal_words_moves(a: BraidWord, b: BraidWord, caps: GarsideCaps) -> list[WordMove]:
    """Braid relations and far commutativity only; inputs equal as braids."""
    path = _bfs_moves(a, b, conjugations=False, cap=caps.word_search)
    if path is None:
        raise ResourceCapError(
            f"positive-equality search exceeded {caps.word_search} words"
        )
    return path


def _rotate_left_moves(w: BraidWord, count: int) -> tuple[list[WordMove], BraidWord]:
    moves = []
    for _ in range(count):
        m = WordMove(MoveKind.ELEM_CONJ_LEFT, 1)
        w = apply_move(w, m)
        moves.append(m)
    return moves, w


def _realize_step(
    cur: BraidWord, target_nf: NormalForm, conj: Perm, caps: GarsideCaps
) -> tuple[list[WordMove], BraidWord]:
    """Moves realizing cur -> word(target_nf) where target = conj^-1 cur conj.

    Requires the current braid to contain Delta: rewrite cur to
    (conj)(conj')(rest), shift conj to the back by elementary
    conjugations, then rewrite to the canonical spelling of the target.
    """
    nf = normal_form(cur)
    if nf.delta_power < 1:
        raise MoveError("realization step needs a positive half twist")
    g_word = perm_word(conj)
    gp_word = perm_word(right_complement(conj))
    rest = nf_word(NormalForm(nf.strands, nf.delta_power - 1, nf.factors))
    staged = BraidWord(cur.strands, g_word + gp_word + rest.letters)
    moves = _equal_words_moves(cur, staged, caps)
    conj_moves, shifted = _rotate_left_moves(staged, len(g_word))
    moves.extend(conj_moves)
    spelled = nf_word(target_nf)
    moves.extend(_equal_words_moves(shifted, spelled, caps))
    return moves, spelled


def _realize_summit_chain(
    w: BraidWord, caps: GarsideCaps
) -> tuple[list[WordMove], BraidWord, NormalForm]:
    """Word moves carrying w into the super summit set (spelled canonically)."""
    nf = normal_form(w)
    rep, ops = _summit_representative(nf, caps, budget_length=len(w.letters))
    canonical = nf_word(nf)
    moves = _equal_words_moves(w, canonical, caps)
    cur = canonical
    cur_nf = nf
    for op in ops:
        if not cur_nf.factors:
            break
        if op == "cycle":
            x = tau_pow(cur_nf.factors[0], cur_nf.delta_power)
            head = perm_word(x)
            rest = nf_word(
                NormalForm(cur_nf.strands, cur_nf.delta_power, cur_nf.factors[1:])
            )
            staged = BraidWord(cur.strands, head + rest.letters)
            moves.extend(_equal_words_moves(cur, staged, caps))
            shift_moves, cur = _rotate_left_moves(staged, len(head))
            moves.extend(shift_moves)
            cur_nf = cycling(cur_nf)
        else:
            tail = perm_word(cur_nf.factors[-1])
            rest = nf_word(
                NormalForm(cur_nf.strands, cur_nf.delta_power, cur_nf.factors[:-1])
            )
            staged = BraidWord(cur.strands, rest.letters + tail)
            moves.extend(_equal_words_moves(cur, staged, caps))
            for _ in range(len(tail)):
                m = WordMove(MoveKind.ELEM_CONJ_RIGHT, len(cur.letters))
                cur = apply_move(cur, m)
                moves.append(m)
            cur_nf = decycling(cur_nf)
    assert cur_nf == rep
    spelled = nf_word(rep)
    moves.extend(_equal_words_moves(cur, spelled, caps))
    return moves, spelled, rep


def _invert_move_path(start: BraidWord, moves: list[WordMove]) -> list[WordMove]:
    """The inverse sequence, transforming replay(start, moves) back to start."""
    from .words import inverse_move, replay  # local import to avoid cycle noise

    states = [start]
    for m in moves:
        states.append(apply_move(states[-1], m))
    inverse = []
    for i in range(len(moves) - 1, -1, -1):
        inverse.append(inverse_move(states[i], moves[i]))
    return inverse


def conjugacy_move_sequence_detailed(
    a: BraidWord, b: BraidWord, caps: GarsideCaps = DEFAULT_CAPS
) -> MoveSequenceResult:
    """An explicit move sequence from a to b, replay-verified.

    Follows the constructive route: converge both words into the super
    summit set by cycling and decycling realized at word level, walk the
    summit set between the two representatives by permutation-braid
    conjugations (each hop split as Delta = gamma gamma' and shifted by
    elementary conjugations), and undo the second chain. Falls back to a
    breadth-first search over all moves when the procedure is capped out.
    """
    from .words import replay

    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")
    if a == b:
        return MoveSequenceResult((), "procedure-found")
    if words_equal_as_braids(a, b):
        return MoveSequenceResult(
            tuple(_equal_words_moves(a, b, caps)), "procedure-found"
        )
    if not are_conjugate(a, b, caps):
        raise MoveError("words are not conjugate")
    if not contains_half_twist(a, caps):
        raise MoveError(
            "conjugate words without a half twist: move realization not guaranteed"
        )
    try:
        moves_a, word_a, rep_a = _realize_summit_chain(a, caps)
        moves_b, word_b, rep_b = _realize_summit_chain(b, caps)
        members, parents = _summit_closure(rep_a, caps)
        assert rep_b.key() in members, "conjugate words must share a summit set"
        # Path rep_b -> rep_a through recorded parents, then reverse it.
        hops: list[tuple[NormalForm, Perm]] = []
        key = rep_b.key()
        while parents[key] is not None:
            parent_key, c = parents[key]  # type: ignore[misc]
            hops.append((members[key], c))
            key = parent_key
        moves = list(moves_a)
        cur = word_a
        for target_nf, c in reversed(hops):
            step_moves, cur = _realize_step(cur, target_nf, c, caps)
            moves.extend(step_moves)
        assert cur == word_b
        moves.extend(_invert_move_path(b, moves_b))
        result = MoveSequenceResult(tuple(moves), "procedure-found")
    except ResourceCapError:
        path = _bfs_moves(a, b, conjugations=True, cap=caps.word_search)
        if path is None:
            raise
        result = MoveSequenceResult(tuple(path), "search-found")
    if replay(a, list(result.moves)) != b:
        path = _bfs_moves(a, b, conjugations=True, cap=caps.word_search)
        if path is None:
            raise ResourceCapError("move search exceeded the configured cap")
        result = MoveSequenceResult(tuple(path), "search-found")
    return result


def conjugacy_move_sequence(
    a: BraidWord, b: BraidWord, caps: GarsideCaps = DEFAULT_CAPS
) -> list[WordMove]:
    return list(conjugacy_move_sequence_detailed(a, b, caps).moves)
