"""
Deterministic drawings of link patterns: SVG arc diagrams and ASCII art.

>>> from springer_sing.linkpattern import parse
>>> print(render_ascii(parse("(1,3)(2,4) n=5")), end="")
   +-----+
+--|--+  |
|  |  |  |
o  o  o  o  o
1  2  3  4  5
"""

from __future__ import annotations

from .linkpattern import Arc, LinkPattern, format_pattern

# fixed geometry so repeated renders are byte-identical
DX = 40
MARGIN = 24
LABEL_GAP = 18
POINT_R = 3


def render_svg(sigma: LinkPattern) -> str:
    n = max(sigma.n, 1)
    width = 2 * MARGIN + (n - 1) * DX
    rmax = max(((j - i) * DX // 2 for i, j in sigma.arcs), default=0)
    base = MARGIN + rmax
    height = base + LABEL_GAP + MARGIN

    def x(p: int) -> int:
        return MARGIN + (p - 1) * DX

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"  <title>{format_pattern(sigma)}</title>",
        f'  <line x1="{x(1)}" y1="{base}" x2="{x(n)}" y2="{base}" stroke="#bbb" stroke-width="1"/>',
    ]
    for i, j in sigma.arcs:
        r = (j - i) * DX // 2
        out.append(f'  <path d="M {x(i)} {base} A {r} {r} 0 0 1 {x(j)} {base}" '
                   f'fill="none" stroke="black" stroke-width="1.5"/>')
    for p in range(1, sigma.n + 1):
        out.append(f'  <circle cx="{x(p)}" cy="{base}" r="{POINT_R}" fill="black"/>')
        out.append(f'  <text x="{x(p)}" y="{base + LABEL_GAP}" font-family="monospace" '
                   f'font-size="12" text-anchor="middle">{p}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _levels(arcs: tuple[Arc, ...]) -> dict[Arc, int]:
    """Height of each arc: above everything it covers, apart from everything it meets."""
    level: dict[Arc, int] = {}
    for a in sorted(arcs, key=lambda a: (a[1] - a[0], a)):
        i, j = a
        lv = 1
        for (p, q), h in level.items():
            if i < p and q < j:
                lv = max(lv, h + 1)
        while any(h == lv and not (q < i or j < p) for (p, q), h in level.items()):
            lv += 1
        level[a] = lv
    return level


def render_ascii(sigma: LinkPattern) -> str:
    """Arcs drawn as boxes above a row of points; 'o' marks every point."""
    n = sigma.n
    w = max(3 * n - 2, 1)
    level = _levels(sigma.arcs)
    top = max(level.values(), default=0)
    grid = [[" "] * w for _ in range(top + 1)]  # row top is the level-1 row's floor

    def col(p: int) -> int:
        return 3 * (p - 1)

    # horizontal bars first, verticals after so they stay visible
    for (i, j), h in level.items():
        row = top - h
        for c in range(col(i), col(j) + 1):
            grid[row][c] = "-"
    for (i, j), h in level.items():
        row = top - h
        grid[row][col(i)] = "+"
        grid[row][col(j)] = "+"
        for r in range(row + 1, top + 1):
            grid[r][col(i)] = "|"
            grid[r][col(j)] = "|"
    lines = ["".join(r).rstrip() for r in grid] if top else []
    lines.append("  ".join("o" for _ in range(n)))
    lines.append("".join(str(p).ljust(3) for p in range(1, n + 1)).rstrip())
    return "\n".join(lines) + "\n"


def render_brackets(sigma: LinkPattern) -> str:
    """One-line form: '(' left end, ')' right end, '.' fixed point."""
    return "".join("." if sigma.is_fixed(p) else ("(" if sigma.mate(p) > p else ")")
                   for p in range(1, sigma.n + 1))
