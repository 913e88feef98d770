"""Minimal deterministic SVG line charts.

Static polyline plots without any plotting dependency: fixed canvas,
axes, min/max tick labels and one or more named series.  Output strings
are byte-stable for identical inputs.
"""

from __future__ import annotations

import numpy as np

__all__ = ["line_chart"]

_WIDTH = 640
_HEIGHT = 400
_MARGIN = 56
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def line_chart(
    x: np.ndarray,
    series: dict[str, np.ndarray],
    title: str = "",
    x_label: str = "",
    y_label: str = "",
) -> str:
    """Render named y-series over a common x axis as an SVG document."""
    x = np.asarray(x, dtype=float)
    if len(x) < 2 or not series:
        body = (
            f'<text x="{_WIDTH / 2}" y="{_HEIGHT / 2}" text-anchor="middle" '
            f'font-size="14">no data</text>'
        )
        return _document(body, title)

    ys = [np.asarray(v, dtype=float) for v in series.values()]
    y_min = min(float(np.min(v)) for v in ys)
    y_max = max(float(np.max(v)) for v in ys)
    if y_max == y_min:
        y_max = y_min + 1.0
    x_min, x_max = float(x[0]), float(x[-1])
    if x_max == x_min:
        x_max = x_min + 1.0

    inner_w = _WIDTH - 2 * _MARGIN
    inner_h = _HEIGHT - 2 * _MARGIN

    def sx(v):
        return _MARGIN + (v - x_min) / (x_max - x_min) * inner_w

    def sy(v):
        return _HEIGHT - _MARGIN - (v - y_min) / (y_max - y_min) * inner_h

    parts = [
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{inner_w}" height="{inner_h}" '
        f'fill="none" stroke="#888" stroke-width="1"/>'
    ]
    for i, (name, y) in enumerate(series.items()):
        pts = " ".join(f"{sx(float(a)):.2f},{sy(float(b)):.2f}" for a, b in zip(x, y))
        color = _COLORS[i % len(_COLORS)]
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_WIDTH - _MARGIN}" y="{_MARGIN + 16 * (i + 1)}" '
            f'text-anchor="end" font-size="12" fill="{color}">{name}</text>'
        )

    labels = [
        (_MARGIN, _HEIGHT - _MARGIN + 18, "middle", _fmt(x_min)),
        (_WIDTH - _MARGIN, _HEIGHT - _MARGIN + 18, "middle", _fmt(x_max)),
        (_MARGIN - 6, _HEIGHT - _MARGIN, "end", _fmt(y_min)),
        (_MARGIN - 6, _MARGIN + 4, "end", _fmt(y_max)),
    ]
    for lx, ly, anchor, text in labels:
        parts.append(
            f'<text x="{lx}" y="{ly}" text-anchor="{anchor}" font-size="11">{text}</text>'
        )
    if x_label:
        parts.append(
            f'<text x="{_WIDTH / 2}" y="{_HEIGHT - 12}" text-anchor="middle" '
            f'font-size="12">{x_label}</text>'
        )
    if y_label:
        parts.append(
            f'<text x="16" y="{_HEIGHT / 2}" text-anchor="middle" font-size="12" '
            f'transform="rotate(-90 16 {_HEIGHT / 2})">{y_label}</text>'
        )
    return _document("\n".join(parts), title)


def _document(body: str, title: str) -> str:
    title_el = (
        f'<text x="{_WIDTH / 2}" y="24" text-anchor="middle" font-size="15" '
        f'font-weight="bold">{title}</text>'
        if title
        else ""
    )
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">\n'
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>\n'
        f"{title_el}\n{body}\n</svg>\n"
    )
