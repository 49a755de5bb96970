"""Deterministic SVG drawings of 4-plat and pillowcase tangles.

Both drawings use a fixed 1000x1000 viewport.  Crossings carry
``class="crossing"`` and closure arcs ``class="closure"`` so they can be
counted without parsing geometry.

The 4-plat follows the construction that twists the left two strands of a
vertical 3-braid first, then alternates; a fourth strand is added on the
left, capped to its neighbour at the top, and the right pair is joined at
the bottom.  The integer part of the expansion is not drawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PreconditionViolation
from .exactnum import ContinuedFraction, format_fraction

SIZE = 1000
_COLUMNS = (220.0, 400.0, 580.0, 760.0)
_TOP, _BOTTOM = 150.0, 850.0
_END_TOP, _END_BOTTOM = 100.0, 900.0
_GAP = 0.18  # fraction of a crossing diagonal left blank under the over-strand

_STYLE = (
    "<style>"
    ".strand,.crossing line,.cap,.closure,.front{stroke:#000;stroke-width:4;fill:none}"
    ".closure{stroke:#1f5fbf}"
    ".back{stroke:#000;stroke-width:3;fill:none;stroke-dasharray:12 8}"
    ".frame{stroke:#888;stroke-width:2;fill:none}"
    "</style>"
)


def _n(v: float) -> str:
    out = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if out == "-0" else out


def _header(title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{title}</title>",
        _STYLE,
    ]


def _line(x1, y1, x2, y2, cls=None) -> str:
    attr = f' class="{cls}"' if cls else ""
    return f'<line{attr} x1="{_n(x1)}" y1="{_n(y1)}" x2="{_n(x2)}" y2="{_n(y2)}"/>'


def _arc(x1, x2, y, up: bool, cls: str) -> str:
    r = abs(x2 - x1) / 2
    sweep = 1 if up else 0
    return f'<path class="{cls}" d="M {_n(x1)} {_n(y)} A {_n(r)} {_n(r)} 0 0 {sweep} {_n(x2)} {_n(y)}"/>'


def _crossing(j: int, y: float, h: float, sign: int, region: int) -> list[str]:
    xl, xr = _COLUMNS[j], _COLUMNS[j + 1]
    # positive crossings: the strand entering top-left passes over
    over = ((xl, y), (xr, y + h)) if sign > 0 else ((xr, y), (xl, y + h))
    under = ((xr, y), (xl, y + h)) if sign > 0 else ((xl, y), (xr, y + h))
    (ux1, uy1), (ux2, uy2) = under
    a, b = 0.5 - _GAP, 0.5 + _GAP
    return [
        f'<g class="crossing" data-region="{region}" data-sign="{"+" if sign > 0 else "-"}">',
        _line(over[0][0], over[0][1], over[1][0], over[1][1]),
        _line(ux1, uy1, ux1 + (ux2 - ux1) * a, uy1 + (uy2 - uy1) * a),
        _line(ux1 + (ux2 - ux1) * b, uy1 + (uy2 - uy1) * b, ux2, uy2),
        "</g>",
    ]


def fourplat_svg(cf: ContinuedFraction, closure: bool = False) -> str:
    if cf.k < 1:
        raise PreconditionViolation("a 4-plat needs at least one twist region")
    # one row per crossing, a straight spacer row between regions and at both ends
    rows: list[tuple[int, int, int] | None] = [None]
    for region, a in enumerate(cf.coefficients, start=1):
        pair = 1 if region % 2 == 1 else 2
        rows.extend((pair, 1 if a > 0 else -1, region) for _ in range(abs(a)))
        rows.append(None)
    h = (_BOTTOM - _TOP) / len(rows)

    title = f"4-plat {cf}" + (" closed" if closure else "")
    out = _header(title)
    for t, row in enumerate(rows):
        y = _TOP + t * h
        busy = set() if row is None else {row[0], row[0] + 1}
        for j, x in enumerate(_COLUMNS):
            if j not in busy:
                out.append(_line(x, y, x, y + h, "strand"))
        if row is not None:
            out.extend(_crossing(row[0], y, h, row[1], row[2]))

    out.append(_arc(_COLUMNS[0], _COLUMNS[1], _TOP, up=True, cls="cap"))
    out.append(_arc(_COLUMNS[2], _COLUMNS[3], _BOTTOM, up=False, cls="cap"))
    for j in (2, 3):
        out.append(_line(_COLUMNS[j], _END_TOP, _COLUMNS[j], _TOP, "strand"))
    for j in (0, 1):
        out.append(_line(_COLUMNS[j], _BOTTOM, _COLUMNS[j], _END_BOTTOM, "strand"))
    if closure:
        out.append(_arc(_COLUMNS[2], _COLUMNS[3], _END_TOP, up=True, cls="closure"))
        out.append(_arc(_COLUMNS[0], _COLUMNS[1], _END_BOTTOM, up=False, cls="closure"))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip_unit_square(slope: Fraction, c: Fraction):
    """Segment of y = slope*x + c inside [0,1]^2, or None if it is empty or a point."""
    lo, hi = Fraction(0), Fraction(1)
    # 0 <= slope*x + c <= 1
    if slope == 0:
        if not 0 <= c <= 1:
            return None
    else:
        x_a, x_b = -c / slope, (1 - c) / slope
        lo, hi = max(lo, min(x_a, x_b)), min(hi, max(x_a, x_b))
    if hi <= lo:
        return None
    return (lo, slope * lo + c), (hi, slope * hi + c)


def pillowcase_segments(x: Fraction) -> tuple[list, list]:
    """Front and back segments, in unit-square coordinates, of the slope-p/q arcs.

    The arcs lift to the lines of slope p/q through the integer lattice, i.e.
    y = (p/q)x + j/q.  Folding the back face onto the front turns slope p/q
    into -p/q while keeping the intercept lattice.
    """
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    if not 0 < p <= q:
        raise PreconditionViolation(f"pillowcase slope must satisfy 0 < p <= q, got {format_fraction(x)}")
    front, back = [], []
    for j in range(-p - q, p + q + 1):
        c = Fraction(j, q)
        for slope, bucket in ((x, front), (-x, back)):
            seg = _clip_unit_square(slope, c)
            if seg is not None:
                bucket.append(seg)
    return front, back


def pillowcase_svg(x: Fraction) -> str:
    front, back = pillowcase_segments(x)
    margin, side = 100.0, 800.0

    def to_svg(pt):
        return margin + side * float(pt[0]), margin + side * (1 - float(pt[1]))

    slope = format_fraction(Fraction(x))
    out = _header(f"pillowcase tangle {slope}")
    out.append(f'<rect class="frame" x="{_n(margin)}" y="{_n(margin)}" width="{_n(side)}" height="{_n(side)}"/>')
    for cls, segs, label in (("back", back, f"-{slope}"), ("front", front, slope)):
        for a, b in segs:
            (x1, y1), (x2, y2) = to_svg(a), to_svg(b)
            out.append(
                f'<line class="{cls}" data-slope="{label}" '
                f'x1="{_n(x1)}" y1="{_n(y1)}" x2="{_n(x2)}" y2="{_n(y2)}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class DiagramSpec:
    """What to draw: a 4-plat from an expansion, or a pillowcase from a slope."""

    kind: str
    payload: Union[ContinuedFraction, Fraction]
    closure: bool = False

    def __post_init__(self):
        if self.kind == "fourplat" and not isinstance(self.payload, ContinuedFraction):
            raise PreconditionViolation("a 4-plat is drawn from a continued fraction")
        if self.kind == "pillowcase" and not isinstance(self.payload, Fraction):
            raise PreconditionViolation("a pillowcase is drawn from a fraction")
        if self.kind not in ("fourplat", "pillowcase"):
            raise PreconditionViolation(f"unknown diagram kind {self.kind!r}")

    def render(self) -> str:
        if self.kind == "fourplat":
            return fourplat_svg(self.payload, self.closure)
        return pillowcase_svg(self.payload)
