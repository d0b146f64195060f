"""SVG and DOT emitters for brick diagrams and linking graphs.

Geometry is deterministic: columns are X_PITCH apart, one word position
is Y_PITCH, the y axis points up (larger word position = higher).
Negative regions are shaded.
"""

from __future__ import annotations

from .bricks import BrickDiagram
from .linking import EdgeKind, LinkingGraph

X_PITCH = 60.0
Y_PITCH = 24.0
MARGIN = 30.0
SHADE = "#b0b0b0"


def _fmt(x: float) -> str:
    return f"{x:.1f}"


def _svg_document(body: list[str], width: float, height: float) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"])


def _extent(word_length: int, strands: int) -> tuple[float, float]:
    width = 2 * MARGIN + max(strands - 1, 1) * X_PITCH
    height = 2 * MARGIN + max(word_length + 1, 2) * Y_PITCH
    return width, height


def _xy(column: float, position: float, height: float) -> tuple[float, float]:
    return MARGIN + (column - 0.5) * X_PITCH, height - MARGIN - position * Y_PITCH


def bricks_svg_body(d: BrickDiagram, height: float) -> list[str]:
    body = ['<g stroke="black" fill="none">']
    for col in range(1, d.word.strands + 1):
        x, y1 = _xy(col, 0, height)
        _, y2 = _xy(col, len(d.word.letters) + 1, height)
        body.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(y1)}" x2="{_fmt(x)}" y2="{_fmt(y2)}" '
            'stroke="#cccccc"/>'
        )
    for b in d.bricks:
        x1, y1 = _xy(b.column, b.lo, height)
        x2, y2 = _xy(b.column + 1, b.hi, height)
        body.append(
            f'<rect x="{_fmt(min(x1, x2))}" y="{_fmt(min(y1, y2))}" '
            f'width="{_fmt(abs(x2 - x1))}" height="{_fmt(abs(y2 - y1))}"/>'
        )
    body.append("</g>")
    return body


def render_bricks_svg(d: BrickDiagram) -> str:
    width, height = _extent(len(d.word.letters), d.word.strands)
    return _svg_document(bricks_svg_body(d, height), width, height)


def graph_svg_body(g: LinkingGraph, height: float, x_shift: float = 0.0) -> list[str]:
    body = ["<g>"]
    for r in g.regions:
        pts = []
        for v in r.vertices:
            col, mid = g.positions[v]
            x, y = _xy(col, mid, height)
            pts.append(f"{_fmt(x + x_shift)},{_fmt(y)}")
        fill = SHADE if r.sign < 0 else "none"
        body.append(
            f'<polygon points="{" ".join(pts)}" fill="{fill}" stroke="none"/>'
        )
    for e in g.edges:
        (c1, m1), (c2, m2) = g.positions[e.a], g.positions[e.b]
        x1, y1 = _xy(c1, m1, height)
        x2, y2 = _xy(c2, m2, height)
        body.append(
            f'<line x1="{_fmt(x1 + x_shift)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2 + x_shift)}" y2="{_fmt(y2)}" stroke="black"/>'
        )
    for b in g.diagram.bricks:
        col, mid = g.positions[b.id]
        x, y = _xy(col, mid, height)
        body.append(
            f'<circle cx="{_fmt(x + x_shift)}" cy="{_fmt(y)}" r="3" fill="black"/>'
        )
        body.append(
            f'<text x="{_fmt(x + x_shift + 6)}" y="{_fmt(y - 6)}" '
            f'font-size="10">{b.id}</text>'
        )
    body.append("</g>")
    return body


def render_graph_svg(g: LinkingGraph) -> str:
    d = g.diagram
    width, height = _extent(len(d.word.letters), d.word.strands)
    return _svg_document(graph_svg_body(g, height), width, height)


def render_both_svg(g: LinkingGraph) -> str:
    d = g.diagram
    width, height = _extent(len(d.word.letters), d.word.strands)
    body = bricks_svg_body(d, height)
    body += graph_svg_body(g, height, x_shift=width)
    return _svg_document(body, 2 * width, height)


def render_graph_dot(g: LinkingGraph) -> str:
    lines = ["graph linking {", "  node [shape=point];"]
    for r in g.regions:
        cycle = " ".join(str(v) for v in r.vertices)
        lines.append(
            f"  // region sign={r.sign:+d} anchor_column={r.anchor_column} "
            f"cycle=({cycle})"
        )
    for b in g.diagram.bricks:
        col, mid = g.positions[b.id]
        lines.append(f'  v{b.id} [pos="{_fmt(col)},{_fmt(mid)}!"];')
    for e in g.edges:
        style = "" if e.kind is EdgeKind.VERTICAL else " [style=dashed]"
        lines.append(f"  v{e.a} -- v{e.b}{style};")
    lines.append("}")
    return "\n".join(lines)
