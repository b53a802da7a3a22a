"""Deterministic SVG drawing of the fan section and its complement rays."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .exchange import SignPattern
from .gfan import CHART_S, ComplementRay, Cone3, all_complements, enumerate_fan

PX_PER_UNIT = 100
# chart window (x from -3 to 4, y from -3.5 to 3.5), in pixels
VIEW = (-300, -350, 700, 700)
RAY_REACH = 40  # chart units; long enough to leave the window

STYLE = (
    ".cone{fill:none;stroke:#1f3b57;stroke-width:0.6}"
    ".cone.trunk{fill:#f6dd9c;fill-opacity:0.55}"
    ".cone.initial{fill:#c9e3f6}"
    ".complement{stroke:#c0392b;stroke-width:0.9;stroke-dasharray:5 3;fill:none}"
)


def _chart(v: Sequence) -> tuple[Fraction, Fraction]:
    """Plane-section chart position of a point (sum 1) or a tangent (sum 0)."""
    _, x2, x3 = (Fraction(c) for c in v)
    return (x2 + x3 / 2, x3 * CHART_S / 2)


def _px(xy) -> tuple[int, int]:
    x, y = xy
    return round(x * PX_PER_UNIT), round(-y * PX_PER_UNIT)


def _cone_element(cone: Cone3) -> str:
    pts = " ".join(f"{x},{y}" for x, y in (_px(_chart(g)) for g in cone.generators))
    cls = "cone initial" if cone.walk == "[]" else ("cone trunk" if cone.trunk else "cone")
    return f'<polygon class="{cls}" data-walk="{cone.walk}" points="{pts}"/>'


def _ray_element(ray: ComplementRay) -> str:
    bx, by = _chart(ray.base)
    dx, dy = _chart(ray.dir)
    length = max(abs(dx), abs(dy))
    t = Fraction(RAY_REACH) / length
    x1, y1 = _px((bx, by))
    x2, y2 = _px((bx + t * dx, by + t * dy))
    walk = ray.walk or ""
    return (
        f'<line class="complement" data-subtree="{ray.subtree}" data-a="{ray.a}" data-b="{ray.b}" '
        f'data-walk="{walk}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'
    )


def render_svg(
    pattern: SignPattern, depth: int, bound: Optional[int] = None, backend: Optional[str] = None
) -> str:
    """SVG text with one polygon per cone and one dashed line per complement ray."""
    cones = enumerate_fan(pattern, depth, backend)
    rays = all_complements(pattern, depth, bound)
    x, y, w, h = VIEW
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x} {y} {w} {h}" width="{w}" height="{h}" '
        f'data-pattern="{pattern.value}" data-depth="{depth}" data-cones="{len(cones)}" data-rays="{len(rays)}">',
        f"<title>G-fan section, {pattern.value}, depth {depth}</title>",
        f"<style>{STYLE}</style>",
        '<g id="cones">',
        *(_cone_element(c) for c in cones),
        "</g>",
        '<g id="complements">',
        *(_ray_element(r) for r in rays),
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def count_elements(svg: str) -> dict[str, int]:
    return {
        "cones": svg.count('class="cone'),
        "complements": svg.count('class="complement"'),
    }
