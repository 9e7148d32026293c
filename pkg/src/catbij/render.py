"""Deterministic text, SVG and DOT renderers.

Fixed palette: blue for descending edges and torsion
balls, red for ascending edges and torsion-free balls, gray for boxes.
Output is byte-identical across runs for identical input.
"""

from .baseball import BASEBALL, classify_balls
from .core import (
    BinaryTree,
    GappedYoungDiagram,
    TorsionPair,
    YoungDiagram,
    node_coordinates,
    size,
    to_paren,
)
from .tamari import TamariPoset

BLUE = "#6688dd"
RED = "#dd6666"
GRAY = "#bbbbbb"

_CELL = "□"  # white square


def render_tree_ascii(t: BinaryTree) -> str:
    """Stretched triangle drawing with / and \\ edges, leaves on one line."""
    n = size(t)
    if n == 0:
        return "•"
    width = 2 * n + 1
    grid = [[" "] * width for _ in range(n + 1)]
    coords = node_coordinates(t)

    def put(row, col, ch):
        grid[row][col] = ch

    for path, c in coords.items():
        row, col = c.x + c.y, n - c.x + c.y
        put(row, col, "o" if c.level <= n else "•")
        if path:
            p = coords[path[:-1]]
            prow, pcol = p.x + p.y, n - p.x + p.y
            step = 1 if path[-1] == "R" else -1
            ch = "\\" if path[-1] == "R" else "/"
            for k in range(1, row - prow):
                put(prow + k, pcol + step * k, ch)
    return "\n".join("".join(r).rstrip() for r in grid)


def render_young_ascii(y: YoungDiagram) -> str:
    """One text line per row of boxes."""
    if not y.rows:
        return "(empty diagram)"
    return "\n".join(_CELL * r for r in y.rows)


def render_gapped_ascii(g: GappedYoungDiagram) -> str:
    """Tilted-frame cells; dots fill the triangle positions with no box."""
    if not g.boxes:
        return "(empty diagram)"
    lines = []
    for row in range(1, g.n):
        cells = []
        for col in range(0, g.n - row):
            cells.append(_CELL if (row, col) in g.boxes else "·")
        line = "".join(cells).rstrip("·")
        lines.append(line)
    while lines and not lines[-1]:
        lines.pop()
    return "\n".join(lines)


def _ball_center(a, b, n, scale, pad):
    # leaves sit at x = 0, 2, .., 2n; ball [a, b] floats over leaves a-1 .. b+1
    x = (a + b) * scale + pad
    y = (n - 1 - (b - a)) * scale + pad
    return x, y


def _svg(width, height, body) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head] + body + ["</svg>"])


def render_torsion_svg(pair: TorsionPair, n: int) -> str:
    """Ball triangle with the torsion class blue and the free class red."""
    scale, pad, r = 40, 30, 14
    body = []
    for a in range(1, n):
        for b in range(a, n):
            x, y = _ball_center(a, b, n, scale, pad)
            from .core import Interval

            ball = Interval(a, b)
            if ball in pair.torsion:
                fill = BLUE
            elif ball in pair.free:
                fill = RED
            else:
                fill = "none"
            body.append(
                f'<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}" '
                'stroke="black" stroke-width="1"/>'
            )
            body.append(
                f'<text x="{x}" y="{y + 4}" font-size="10" text-anchor="middle">'
                f"{a},{b}</text>"
            )
    width = 2 * n * scale + 2 * pad
    height = n * scale + 2 * pad
    return _svg(width, height, body)


def render_wire_svg(t: BinaryTree) -> str:
    """Tree edges plus the ball grid: baseballs plain, crossballs with an X."""
    n = size(t)
    scale, pad, r = 40, 30, 12

    def pt(x, y):
        # tree coordinate (x, y) -> pixel position
        px = (n - x + y) * scale + pad
        py = (x + y) * scale + pad
        return px, py

    body = []
    coords = node_coordinates(t)
    for path, c in sorted(coords.items()):
        if path:
            p = coords[path[:-1]]
            x1, y1 = pt(p.x, p.y)
            x2, y2 = pt(c.x, c.y)
            color = BLUE if path[-1] == "R" else RED
            body.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'stroke="{color}" stroke-width="2"/>'
            )
    if n >= 2:
        kinds = classify_balls(t)
        for ball, kind in sorted(kinds.items()):
            bx = (ball.a + ball.b) * scale + pad
            by = (n - 1 - (ball.b - ball.a)) * scale + pad
            body.append(
                f'<circle cx="{bx}" cy="{by}" r="{r}" fill="white" '
                'stroke="black" stroke-width="1"/>'
            )
            if kind != BASEBALL:
                d = int(r * 0.7)
                body.append(
                    f'<line x1="{bx - d}" y1="{by - d}" x2="{bx + d}" y2="{by + d}" '
                    'stroke="black" stroke-width="1"/>'
                )
                body.append(
                    f'<line x1="{bx - d}" y1="{by + d}" x2="{bx + d}" y2="{by - d}" '
                    'stroke="black" stroke-width="1"/>'
                )
    from .baseball import tree_to_perm

    perm = tree_to_perm(t)
    for w in range(1, n + 1):
        rx = (n + w) * scale + pad + 18
        ry = (w - 1) * scale + pad + 4
        body.append(
            f'<text x="{rx}" y="{ry}" font-size="12" text-anchor="middle">{w}</text>'
        )
        lx = (n - w) * scale + pad - 18
        body.append(
            f'<text x="{lx}" y="{ry}" font-size="12" text-anchor="middle">'
            f"{perm[w - 1]}</text>"
        )
    width = 2 * n * scale + 2 * pad + 40
    height = (n + 1) * scale + 2 * pad
    return _svg(width, height, body)


def render_lattice_dot(p: TamariPoset) -> str:
    """Hasse diagram in DOT, node IDs being the paren strings."""
    lines = ["digraph tamari {", '  rankdir="BT";']
    for t in p.nodes:
        name = to_paren(t)
        lines.append(f'  "{name}" [shape=box];')
    for (lo, hi) in sorted((to_paren(l), to_paren(u)) for (l, u) in p.covers):
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines)
