"""Small finite groups as multiplication tables.

Built-in targets are the symmetric groups S3..S5, the dihedral groups of
the square, pentagon and hexagon, and the quaternion group. Custom
targets load from a table file: first line |G|, then |G| rows of |G|
indices, identity at index 0. Tables are validated on load.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations


@dataclass(frozen=True)
class FiniteTarget:
    name: str
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    inverse: tuple[int, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]


def _with_inverses(name: str, table: list[list[int]], identity: int = 0) -> FiniteTarget:
    n = len(table)
    inverse = [-1] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == identity:
                inverse[a] = b
                break
    if any(i < 0 for i in inverse):
        raise ValueError(f"group table {name!r} has an element without inverse")
    return FiniteTarget(name, tuple(tuple(r) for r in table), identity, tuple(inverse))


def validate_target(t: FiniteTarget) -> None:
    """Identity, latin-square, inverse, and full associativity checks."""
    n = t.size
    if not 0 <= t.identity < n:
        raise ValueError("identity index out of range")
    for a in range(n):
        if t.mul(t.identity, a) != a or t.mul(a, t.identity) != a:
            raise ValueError(f"{t.name}: identity fails at {a}")
        if sorted(t.table[a]) != list(range(n)):
            raise ValueError(f"{t.name}: row {a} is not a permutation")
        if sorted(t.table[b][a] for b in range(n)) != list(range(n)):
            raise ValueError(f"{t.name}: column {a} is not a permutation")
        if t.mul(a, t.inv(a)) != t.identity:
            raise ValueError(f"{t.name}: inverse fails at {a}")
    for a in range(n):
        for b in range(n):
            ab = t.mul(a, b)
            row_a = t.table[a]
            row_ab = t.table[ab]
            for c in range(n):
                if row_ab[c] != row_a[t.table[b][c]]:
                    raise ValueError(f"{t.name}: associativity fails at {a},{b},{c}")


def symmetric_group(m: int) -> FiniteTarget:
    elems = sorted(permutations(range(m)))  # identity is lex-first
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [index[tuple(b[a[i]] for i in range(m))] for b in elems] for a in elems
    ]
    return _with_inverses(f"S{m}", table)


def dihedral_group(m: int) -> FiniteTarget:
    # Element f*m+a encodes s^f r^a; r^a s = s r^-a.
    def mul(x: int, y: int) -> int:
        f1, a1 = divmod(x, m)
        f2, a2 = divmod(y, m)
        f = (f1 + f2) % 2
        a = ((-a1 if f2 else a1) + a2) % m
        return f * m + a

    table = [[mul(x, y) for y in range(2 * m)] for x in range(2 * m)]
    return _with_inverses(f"D{m}", table)


def quaternion_group() -> FiniteTarget:
    # 0..7 = 1, -1, i, -i, j, -j, k, -k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): "1", ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "i"): "-k",
        ("j", "k"): "i", ("k", "j"): "-i",
        ("k", "i"): "j", ("i", "k"): "-j",
    }

    def mul_names(x: str, y: str) -> str:
        sx, ux = (x[1:], -1) if x.startswith("-") else (x, 1)
        sy, uy = (y[1:], -1) if y.startswith("-") else (y, 1)
        if sx == "1":
            prod, sign = sy, 1
        elif sy == "1":
            prod, sign = sx, 1
        else:
            prod = base[(sx, sy)]
            prod, sign = (prod[1:], -1) if prod.startswith("-") else (prod, 1)
        sign *= ux * uy
        return prod if sign == 1 else ("-" + prod if not prod.startswith("-") else prod[1:])

    index = {n: i for i, n in enumerate(names)}
    table = [[index[mul_names(x, y)] for y in names] for x in names]
    return _with_inverses("Q8", table)


def builtin_targets() -> dict[str, FiniteTarget]:
    return {
        "S3": symmetric_group(3),
        "S4": symmetric_group(4),
        "S5": symmetric_group(5),
        "D4": dihedral_group(4),
        "D5": dihedral_group(5),
        "D6": dihedral_group(6),
        "Q8": quaternion_group(),
    }


def load_table(text: str, name: str = "custom") -> FiniteTarget:
    """Parse the multiplication-table file format and validate."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty table file")
    n = int(tokens[0])
    values = [int(x) for x in tokens[1:]]
    if len(values) != n * n:
        raise ValueError(f"expected {n * n} table entries, got {len(values)}")
    table = [values[i * n : (i + 1) * n] for i in range(n)]
    target = _with_inverses(name, table, identity=0)
    validate_target(target)
    return target


def direct_product(t1: FiniteTarget, t2: FiniteTarget) -> FiniteTarget:
    n1, n2 = t1.size, t2.size
    table = [
        [
            t1.mul(a1, b1) * n2 + t2.mul(a2, b2)
            for b1 in range(n1)
            for b2 in range(n2)
        ]
        for a1 in range(n1)
        for a2 in range(n2)
    ]
    return _with_inverses(f"{t1.name}x{t2.name}", table, identity=0)
