"""Garside machinery: normal forms, summit sets, and conjugacy as word moves.

The pair sigma_1 sigma_2 sigma_1 sigma_1 sigma_2 sigma_1 and
sigma_1 sigma_1 sigma_2 sigma_1 sigma_1 sigma_2 turns out to be the full
twist written two ways: the normal forms coincide and two braid relations
connect the words. A second pair is genuinely conjugate-but-not-equal and
the conjugacy is realized move by move.
"""

from braidforge import (
    BraidWord,
    are_conjugate,
    conjugacy_move_sequence_detailed,
    contains_half_twist,
    normal_form,
    parse_word,
    replay,
    summit,
    words_equal_as_braids,
)

a = parse_word("1 2 1 1 2 1")
b = parse_word("1 1 2 1 1 2")
print("normal form of", a, "->", normal_form(a).to_json())
print("normal form of", b, "->", normal_form(b).to_json())
print("equal as braids:", words_equal_as_braids(a, b))
result = conjugacy_move_sequence_detailed(a, b)
print("moves:", [(m.kind.value, m.position) for m in result.moves],
      f"({result.method})")
assert replay(a, list(result.moves)) == b

print()
x = parse_word("1 2 1 2 2 1")
y = parse_word("1 2 2 2 1 2")
print(x, "vs", y)
print("  equal:", words_equal_as_braids(x, y), " conjugate:", are_conjugate(x, y))
print("  half twist in class:", contains_half_twist(x))
data = summit(normal_form(x))
print(f"  summit power {data.summit_power}, super summit set of size "
      f"{len(data.summit_set)}")
result = conjugacy_move_sequence_detailed(x, y)
print(f"  realized by {len(result.moves)} moves ({result.method}):")
print("   ", " ".join(f"{m.kind.value}@{m.position}" for m in result.moves))
assert replay(x, list(result.moves)) == y

print()
print("no generator shared, no half twist: realization is refused")
u, v = BraidWord(3, (1, 1)), BraidWord(3, (2, 2))
print(f"  {u} ~ {v}:", are_conjugate(u, v),
      "; half twist:", contains_half_twist(u))
