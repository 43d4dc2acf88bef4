"""Deterministic SVG 1.1 drawings of terrains and guard solutions."""

from __future__ import annotations

from .solver import GuardSolution
from .terrain import Terrain, VertexClass

CLASS_COLORS = {
    VertexClass.LEFT_CONVEX: "#1f77b4",
    VertexClass.RIGHT_CONVEX: "#d62728",
    VertexClass.LEFT_REFLEX: "#2ca02c",
    VertexClass.RIGHT_REFLEX: "#ff7f0e",
}
PAD = 20


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(t: Terrain, solution: GuardSolution | None = None, unit: float | None = None) -> str:
    xs = t.xs.tolist()
    ys = t.ys.tolist()
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if unit is None:
        unit = max(2.0, min(40.0, 1000.0 / max(1, x1 - x0, y1 - y0)))
    width = (x1 - x0) * unit + 2 * PAD
    height = (y1 - y0) * unit + 2 * PAD

    def px(i: int) -> tuple[str, str]:
        return _fmt((xs[i] - x0) * unit + PAD), _fmt((y1 - ys[i]) * unit + PAD)

    r = _fmt(max(1.5, min(5.0, unit / 4)))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#555"/></marker>',
        "</defs>",
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
    ]
    path = " ".join(("M" if i == 0 else "L") + ",".join(px(i)) for i in range(t.n))
    out.append(f'<path class="terrain" d="{path}" fill="none" stroke="black" stroke-width="1.5"/>')
    if solution is not None:
        for w, g in sorted(solution.assignment.items()):
            if w == g:
                continue
            (ax, ay), (bx, by) = px(g), px(w)
            out.append(
                f'<line class="assign" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                'stroke="#555" stroke-width="0.8" stroke-dasharray="3,2" marker-end="url(#arrow)"/>'
            )
    classes = t.classification
    for i in range(t.n):
        cx, cy = px(i)
        vc = classes[i]
        out.append(
            f'<circle class="vertex {vc.short}" cx="{cx}" cy="{cy}" r="{r}" '
            f'fill="{CLASS_COLORS[vc]}"><title>v{i + 1} {vc.short} ({xs[i]},{ys[i]})</title></circle>'
        )
    if solution is not None:
        gr = _fmt(float(r) * 2)
        for g in solution.guards:
            cx, cy = px(g)
            out.append(
                f'<circle class="guard" cx="{cx}" cy="{cy}" r="{gr}" fill="none" '
                'stroke="black" stroke-width="1.5"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
