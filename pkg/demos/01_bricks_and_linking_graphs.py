"""From a positive braid word to its brick diagram and signed linking graph.

Walks through three words: one whose graph is a four-cycle with a signed
region, one whose graph is the star D4, and a fourteen-letter word on four
strands with a richer region structure. Writes SVG drawings next to this
script.
"""

from pathlib import Path

from braidforge import build_bricks, build_graph, parse_word
from braidforge.render import render_both_svg

OUT = Path(__file__).parent

for text, note in [
    ("1 2 1 1 2 1", "four-cycle graph, one signed region"),
    ("1 1 2 1 1 2", "star-shaped tree, no regions"),
    ("1 3 1 2 1 3 1 3 1 2 3 1 3 2", "four strands, four regions"),
]:
    word = parse_word(text)
    diagram = build_bricks(word)
    graph = build_graph(diagram)
    print(f"word {text!r}  ({note})")
    print(f"  {len(diagram.bricks)} bricks:", end=" ")
    print(", ".join(f"#{b.id}[col {b.column}: {b.lo}..{b.hi}]" for b in diagram.bricks))
    vertical = sum(1 for e in graph.edges if e.kind.value == "vertical")
    print(f"  {len(graph.edges)} edges ({vertical} vertical), "
          f"{len(graph.regions)} bounded regions")
    for r in graph.regions:
        print(f"    region {r.vertices} sign {r.sign:+d} anchored in column "
              f"{r.anchor_column}")
    out = OUT / f"graph_{text.replace(' ', '')[:10]}.svg"
    out.write_text(render_both_svg(graph))
    print(f"  wrote {out.name}")
    print()
