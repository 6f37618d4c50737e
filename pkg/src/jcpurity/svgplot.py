"""Standalone SVG line charts of scan series over scaled time."""

from __future__ import annotations

import os

from .errors import EmptySeries
from .scan import FIELDS

__all__ = ["COLORS", "DEFAULT_SERIES", "render_svg", "svg_document"]

DEFAULT_SERIES = ("tan_phi", "concurrence", "excitation")

COLORS = {
    "tan_phi": "blue",
    "concurrence": "red",
    "excitation": "green",
}
_SPARE = ("black", "orange", "purple", "brown", "magenta", "teal", "gray", "olive")

LABELS = {
    "tan_phi": "degree of purity tan φ",
    "concurrence": "concurrence C",
    "excitation": "excitation ½(1+r3)",
}

WIDTH, HEIGHT = 860, 500
LEFT, RIGHT, TOP, BOTTOM = 70, 240, 30, 60
Y_MIN, Y_MAX = 0.0, 1.05


def _color(name, used):
    if name in COLORS:
        return COLORS[name]
    for c in _SPARE:
        if c not in used:
            return c
    return "black"


def _num(v):
    return f"{v:.2f}"


def _plot_box():
    return LEFT, TOP, WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM


def y_pixel(v: float) -> float:
    """Pixel row of data value ``v`` on the fixed ``[0, 1.05]`` axis."""
    _, top, _, h = _plot_box()
    return top + h * (Y_MAX - v) / (Y_MAX - Y_MIN)


def _ticks(lo, hi, count=5):
    step = (hi - lo) / count
    return [lo + i * step for i in range(count + 1)]


def svg_document(rows, series=DEFAULT_SERIES) -> str:
    rows = [r.row() if hasattr(r, "row") else r for r in rows]
    series = list(series)
    if len(rows) < 2:
        raise EmptySeries("need at least two records to draw a line")
    if not series:
        raise EmptySeries("no series selected")
    for name in series:
        if name not in FIELDS or name == "tau":
            raise EmptySeries(f"unknown series {name!r}")

    x0, top, w, h = _plot_box()
    taus = [r["tau"] for r in rows]
    t_lo, t_hi = taus[0], taus[-1]
    span = (t_hi - t_lo) or 1.0

    def xp(t):
        return x0 + w * (t - t_lo) / span

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg version="1.1" xmlns="http://www.w3.org/2000/svg" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        "<defs>",
        f'<clipPath id="plot"><rect x="{x0}" y="{top}" width="{w}" height="{h}"/></clipPath>',
        "</defs>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{x0}" y="{top}" width="{w}" height="{h}" fill="none" stroke="black"/>',
        '<g font-family="sans-serif" font-size="12" fill="black">',
    ]
    for v in _ticks(Y_MIN, 1.0):
        y = _num(y_pixel(v))
        out.append(f'<line x1="{x0 - 5}" y1="{y}" x2="{x0}" y2="{y}" stroke="black"/>')
        out.append(f'<text x="{x0 - 8}" y="{y}" text-anchor="end" dy="4">{v:.1f}</text>')
    for t in _ticks(t_lo, t_hi):
        x = _num(xp(t))
        out.append(f'<line x1="{x}" y1="{top + h}" x2="{x}" y2="{top + h + 5}" stroke="black"/>')
        out.append(f'<text x="{x}" y="{top + h + 20}" text-anchor="middle">{t:g}</text>')
    out.append(f'<text x="{x0 + w / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle">'
               "scaled time τ = g t</text>")
    out.append(f'<text x="18" y="{top + h / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 18 {top + h / 2:.1f})">value</text>')
    out.append("</g>")

    used = []
    legend = []
    for k, name in enumerate(series):
        color = _color(name, used)
        used.append(color)
        pts = " ".join(f"{_num(xp(r['tau']))},{_num(y_pixel(r[name]))}" for r in rows)
        out.append(f'<polyline id="series-{name}" fill="none" stroke="{color}" '
                   f'stroke-width="1" clip-path="url(#plot)" points="{pts}"/>')
        ly = top + 20 + 20 * k
        lx = x0 + w + 15
        legend.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 25}" y2="{ly}" '
                      f'stroke="{color}" stroke-width="2"/>')
        legend.append(f'<text x="{lx + 32}" y="{ly + 4}">{LABELS.get(name, name)}</text>')
    out.append('<g id="legend" font-family="sans-serif" font-size="12" fill="black">')
    out.extend(legend)
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(records, series, path) -> None:
    """Write an SVG chart of ``series`` (names from the record schema) against ``tau``."""
    text = svg_document(records, series)
    tmp = f"{os.fspath(path)}.part"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)
