"""Deterministic SVG rendering of a consumed-power-vs-distance sweep.

The SVG is assembled from plain strings with fixed formatting: no timestamps,
machine names, or library-generated ids, so identical input yields an
identical file. Axes are linear; one polyline per architecture; a dashed
vertical line marks each architecture's first infeasible distance.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .sweepcsv import CsvRecord

VIEW_WIDTH = 800
VIEW_HEIGHT = 520
PLOT_LEFT = 80.0
PLOT_RIGHT = 770.0
PLOT_TOP = 30.0
PLOT_BOTTOM = 440.0

X_AXIS_LABEL = "distance from shore node [km]"
Y_AXIS_LABEL = "consumed power [W]"

ARCH_COLORS = {"fly-bs": "#d62728", "fly-rrh": "#1f77b4"}
_N_TICKS = 5


def _axis_bounds(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        # degenerate span: pad symmetrically so the point sits mid-plot
        lo -= 1.0
        hi += 1.0
    return lo, hi


def _coord(value: float) -> str:
    return f"{value:.2f}"


class _AxisMap:
    """Affine data-to-pixel mapping over the plot rectangle."""

    def __init__(self, d_lo, d_hi, p_lo, p_hi):
        self.d_lo, self.d_hi = d_lo, d_hi
        self.p_lo, self.p_hi = p_lo, p_hi

    def x(self, distance_km: float) -> float:
        frac = (distance_km - self.d_lo) / (self.d_hi - self.d_lo)
        return PLOT_LEFT + frac * (PLOT_RIGHT - PLOT_LEFT)

    def y(self, power_w: float) -> float:
        frac = (power_w - self.p_lo) / (self.p_hi - self.p_lo)
        return PLOT_BOTTOM - frac * (PLOT_BOTTOM - PLOT_TOP)


def first_infeasible_km(records: Sequence[CsvRecord], arch: str) -> float | None:
    """Smallest distance at which `arch` is marked infeasible, else None."""
    distances = sorted(r.distance_km for r in records if r.arch == arch and not r.feasible)
    return distances[0] if distances else None


def render_svg(records: Sequence[CsvRecord]) -> str:
    """Render sweep records to a standalone SVG document."""
    if not records:
        raise ValueError("no records to plot")

    archs = sorted({r.arch for r in records})
    axis = _AxisMap(
        *_axis_bounds([r.distance_km for r in records]),
        *_axis_bounds([r.consumed_power_w for r in records]),
    )

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW_WIDTH}" '
        f'height="{VIEW_HEIGHT}" viewBox="0 0 {VIEW_WIDTH} {VIEW_HEIGHT}">',
        f'<rect x="0" y="0" width="{VIEW_WIDTH}" height="{VIEW_HEIGHT}" fill="#ffffff"/>',
        f'<rect x="{_coord(PLOT_LEFT)}" y="{_coord(PLOT_TOP)}" '
        f'width="{_coord(PLOT_RIGHT - PLOT_LEFT)}" height="{_coord(PLOT_BOTTOM - PLOT_TOP)}" '
        f'fill="none" stroke="#333333" stroke-width="1"/>',
    ]

    # axis ticks and numeric labels
    for i in range(_N_TICKS):
        frac = i / (_N_TICKS - 1)
        d = axis.d_lo + frac * (axis.d_hi - axis.d_lo)
        x = _coord(axis.x(d))
        parts.append(
            f'<line x1="{x}" y1="{_coord(PLOT_BOTTOM)}" x2="{x}" '
            f'y2="{_coord(PLOT_BOTTOM + 6)}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x}" y="{_coord(PLOT_BOTTOM + 22)}" font-family="sans-serif" '
            f'font-size="12" text-anchor="middle">{d:.4g}</text>'
        )
        p = axis.p_lo + frac * (axis.p_hi - axis.p_lo)
        y = _coord(axis.y(p))
        parts.append(
            f'<line x1="{_coord(PLOT_LEFT - 6)}" y1="{y}" x2="{_coord(PLOT_LEFT)}" '
            f'y2="{y}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_coord(PLOT_LEFT - 10)}" y="{y}" font-family="sans-serif" '
            f'font-size="12" text-anchor="end" dominant-baseline="middle">{p:.4g}</text>'
        )

    # axis titles
    parts.append(
        f'<text x="{_coord((PLOT_LEFT + PLOT_RIGHT) / 2)}" y="{_coord(PLOT_BOTTOM + 48)}" '
        f'font-family="sans-serif" font-size="14" text-anchor="middle">'
        f"{escape(X_AXIS_LABEL)}</text>"
    )
    y_mid = _coord((PLOT_TOP + PLOT_BOTTOM) / 2)
    parts.append(
        f'<text x="22" y="{y_mid}" font-family="sans-serif" font-size="14" '
        f'text-anchor="middle" transform="rotate(-90 22 {y_mid})">'
        f"{escape(Y_AXIS_LABEL)}</text>"
    )

    # dashed markers at each architecture's first infeasible distance
    for arch in archs:
        d = first_infeasible_km(records, arch)
        if d is None:
            continue
        x = _coord(axis.x(d))
        color = ARCH_COLORS.get(arch, "#777777")
        parts.append(
            f'<line x1="{x}" y1="{_coord(PLOT_TOP)}" x2="{x}" y2="{_coord(PLOT_BOTTOM)}" '
            f'stroke="{color}" stroke-width="1" stroke-dasharray="6 4"/>'
        )

    # one power-vs-distance polyline per architecture
    for arch in archs:
        series = sorted(
            ((r.distance_km, r.consumed_power_w) for r in records if r.arch == arch)
        )
        points = " ".join(f"{_coord(axis.x(d))},{_coord(axis.y(p))}" for d, p in series)
        color = ARCH_COLORS.get(arch, "#777777")
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{points}"/>'
        )

    # legend, top-left inside the plot
    legend_x = PLOT_LEFT + 14
    legend_y = PLOT_TOP + 18
    for i, arch in enumerate(archs):
        y = legend_y + i * 18
        color = ARCH_COLORS.get(arch, "#777777")
        parts.append(
            f'<line x1="{_coord(legend_x)}" y1="{_coord(y - 4)}" '
            f'x2="{_coord(legend_x + 26)}" y2="{_coord(y - 4)}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{_coord(legend_x + 32)}" y="{_coord(y)}" font-family="sans-serif" '
            f'font-size="12">{escape(arch)}</text>'
        )
    if any(first_infeasible_km(records, arch) is not None for arch in archs):
        y = legend_y + len(archs) * 18
        parts.append(
            f'<line x1="{_coord(legend_x)}" y1="{_coord(y - 4)}" '
            f'x2="{_coord(legend_x + 26)}" y2="{_coord(y - 4)}" '
            f'stroke="#333333" stroke-width="1" stroke-dasharray="6 4"/>'
        )
        parts.append(
            f'<text x="{_coord(legend_x + 32)}" y="{_coord(y)}" font-family="sans-serif" '
            f'font-size="12">first infeasible distance</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
