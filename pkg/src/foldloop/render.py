"""
ASCII and SVG pictures of closed braids.

Strands are drawn top to bottom, one crossing per horizontal slab in letter
order. Closure arcs leave the top of each strand, nest to the right of the
braid and re-enter at the bottom of the same position, so they add no
crossings.

ASCII glyphs:

    |        strand (or closure arc) running vertically
    - +      closure arc running horizontally, and its corners
    \\ /      strands converging into / diverging from a crossing
    /        centre of a positive crossing (over strand runs down to the left)
    \\        centre of a negative crossing (over strand runs down to the right)

A positive letter is drawn with the strand coming from position i+1 on top,
which is the right-handed crossing when all strands point downward.
"""

from __future__ import annotations

from typing import Literal

from .braid import BraidWord

Format = Literal["ascii", "svg"]


def _ascii(word: BraidWord) -> str:
    m = word.strands
    width = 4 * m - 1

    def ret_col(p: int) -> int:
        return 2 * m + 2 * (m - p)

    def blank() -> list[str]:
        return [" "] * width

    def fill(row: list[str], strands: range, skip: tuple[int, ...] = ()) -> None:
        for p in strands:
            if p not in skip:
                row[2 * (p - 1)] = "|"
            row[ret_col(p)] = "|"

    lines: list[list[str]] = []

    def arc_row(p: int, active: range) -> list[str]:
        row = blank()
        fill(row, active)
        a, b = 2 * (p - 1), ret_col(p)
        for x in range(a + 1, b):
            row[x] = "-"
        row[a] = row[b] = "+"
        return row

    for p in range(1, m + 1):
        lines.append(arc_row(p, range(1, p)))
    spacer = blank()
    fill(spacer, range(1, m + 1))
    lines.append(spacer)
    for g in word.letters:
        i = g.index
        c = 2 * (i - 1)
        top, mid, bot = blank(), blank(), blank()
        for row in (top, mid, bot):
            fill(row, range(1, m + 1), skip=(i, i + 1))
        top[c], top[c + 2] = "\\", "/"
        mid[c + 1] = "/" if g.sign > 0 else "\\"
        bot[c], bot[c + 2] = "/", "\\"
        lines.extend((top, mid, bot))
    lines.append(list(spacer))
    for p in range(m, 0, -1):
        lines.append(arc_row(p, range(1, p)))
    return "\n".join("".join(row).rstrip() for row in lines) + "\n"


_STEP = 40
_ARC = 12
_MARGIN = 20


def _fmt(v: float) -> str:
    return f"{v:.1f}".rstrip("0").rstrip(".")


def _line(x1: float, y1: float, x2: float, y2: float) -> str:
    return f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'


def _svg(word: BraidWord) -> str:
    m, n = word.strands, len(word)

    def sx(p: int) -> int:
        return _MARGIN + _STEP * (p - 1)

    def rx(p: int) -> int:
        return _MARGIN + _STEP * (m - 1) + _STEP * (m - p + 1)

    y0 = _MARGIN + _ARC * m
    rows = max(n, 1)
    y1 = y0 + _STEP * rows
    width = rx(1) + _MARGIN
    height = y1 + _ARC * m + _MARGIN

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>closed braid {' '.join(str(k) for k in word.to_ints()) or '(empty)'}"
        f" on {m} strand{'s' if m != 1 else ''}</title>",
        '<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">',
        '<g class="closure">',
    ]
    for p in range(1, m + 1):
        ytop = _MARGIN + _ARC * (p - 1)
        ybot = y1 + _ARC * (m - p + 1)
        pts = [(sx(p), y0), (sx(p), ytop), (rx(p), ytop), (rx(p), ybot), (sx(p), ybot), (sx(p), y1)]
        d = "M " + " L ".join(f"{x} {y}" for x, y in pts)
        out.append(f'<path d="{d}"/>')
    out.append("</g>")

    out.append('<g class="strands">')
    if n == 0:
        for p in range(1, m + 1):
            out.append(_line(sx(p), y0, sx(p), y1))
    for k, g in enumerate(word.letters):
        ya, yb = y0 + _STEP * k, y0 + _STEP * (k + 1)
        for p in range(1, m + 1):
            if p not in (g.index, g.index + 1):
                out.append(_line(sx(p), ya, sx(p), yb))
    out.append("</g>")

    for k, g in enumerate(word.letters):
        i = g.index
        ya, yb = y0 + _STEP * k, y0 + _STEP * (k + 1)
        xl, xr = sx(i), sx(i + 1)
        if g.sign > 0:
            over = (xr, ya, xl, yb)
            under = (xl, ya, xr, yb)
        else:
            over = (xl, ya, xr, yb)
            under = (xr, ya, xl, yb)
        ux1, uy1, ux2, uy2 = under
        gap_a = (ux1 + 0.35 * (ux2 - ux1), uy1 + 0.35 * (uy2 - uy1))
        gap_b = (ux1 + 0.65 * (ux2 - ux1), uy1 + 0.65 * (uy2 - uy1))
        out.append(
            f'<g class="crossing" data-level="{k}" data-generator="{i}" '
            f'data-sign="{"+1" if g.sign > 0 else "-1"}">'
        )
        out.append(_line(*over))
        out.append(_line(ux1, uy1, *gap_a))
        out.append(_line(*gap_b, ux2, uy2))
        out.append("</g>")
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_diagram(word: BraidWord, format: Format = "ascii") -> str:
    if format == "ascii":
        return _ascii(word)
    if format == "svg":
        return _svg(word)
    raise ValueError(f"unknown format {format!r}; expected 'ascii' or 'svg'")
