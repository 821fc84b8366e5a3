"""Minimal SVG drawings of hybrid paths."""

from __future__ import annotations

from .paths import HybridPath, _cells

CELL = 28
PAD = 20


def render_path(path: HybridPath) -> str:
    pts = path.points()
    cells = _cells(path)
    xs = [x for x, _ in pts] + [0]
    ys = [y for _, y in pts] + [0]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    width, height = (x1 - x0) * CELL + 2 * PAD, (y1 - y0) * CELL + 2 * PAD

    def sx(x):
        return PAD + (x - x0) * CELL

    def sy(y):
        return PAD + (y1 - y) * CELL

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           '<rect width="100%" height="100%" fill="white"/>']
    for s, t in sorted(cells):
        out.append(f'<rect x="{sx(s - 1)}" y="{sy(t)}" width="{CELL}" height="{CELL}" '
                   f'fill="#dde8f7"/>')
    for x in range(x0, x1 + 1):
        out.append(f'<line x1="{sx(x)}" y1="{sy(y0)}" x2="{sx(x)}" y2="{sy(y1)}" stroke="#ccc"/>')
    for y in range(y0, y1 + 1):
        out.append(f'<line x1="{sx(x0)}" y1="{sy(y)}" x2="{sx(x1)}" y2="{sy(y)}" stroke="#ccc"/>')
    out.append(f'<line x1="{sx(x0)}" y1="{sy(0)}" x2="{sx(x1)}" y2="{sy(0)}" stroke="#444"/>')
    out.append(f'<line x1="{sx(0)}" y1="{sy(y0)}" x2="{sx(0)}" y2="{sy(y1)}" stroke="#444"/>')
    coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
    out.append(f'<polyline points="{coords}" fill="none" stroke="#c0392b" stroke-width="3"/>')
    # mark the turning point inside each two-part step
    i = 0
    for step in path.steps:
        i += len(step.value)
        if step.is_combo:
            x, y = pts[i - 1]
            out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="4" fill="#2c3e50"/>')
    out.append(f'<text x="{PAD}" y="{PAD - 6}" font-size="12" font-family="monospace">'
               f'{path} -> {path.end}</text>')
    out.append("</svg>")
    return "\n".join(out)
