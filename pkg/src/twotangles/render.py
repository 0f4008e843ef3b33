"""ASCII and SVG pictures of generator words and movies.

The source sits at the top and generators are drawn downwards, one band
each.  In a crossing the strand running from top right to bottom left is
over for X and under for Xb.  SVG output uses integer coordinates only,
a band height of 40 and a strand pitch of 24, so it is byte-stable.
"""
from __future__ import annotations

from .cells import Movie, format_cell
from .words import CAP, CUP, X, Word

BAND = 40
PITCH = 24
FRAME_GAP = 48


# --------------------------------------------------------------------------
# ascii


def _ascii_rows(f: Word) -> list[str]:
    cols = 2 * max(f.objects()) + 1
    rows = []

    def blank():
        return [" "] * cols

    top = blank()
    for p in range(f.source):
        top[2 * p] = "|"
    rows.append(top)
    n = f.source
    for g in f.gens:
        i = g.left
        band = [blank(), blank(), blank()]
        if g.kind == CAP:
            # align on the wider bottom object
            for p in range(n):
                c = 2 * (p if p < i else p + 2)
                for r in band:
                    r[c] = "|"
            band[1][2 * i + 1] = "_"
            band[2][2 * i] = "/"
            band[2][2 * i + 2] = "\\"
        elif g.kind == CUP:
            for p in range(n):
                if p in (i, i + 1):
                    continue
                for r in band:
                    r[2 * p] = "|"
            band[0][2 * i] = "|"
            band[0][2 * i + 2] = "|"
            band[1][2 * i] = "\\"
            band[1][2 * i + 1] = "_"
            band[1][2 * i + 2] = "/"
        else:
            for p in range(n):
                if p in (i, i + 1):
                    continue
                for r in band:
                    r[2 * p] = "|"
            band[0][2 * i] = "\\"
            band[0][2 * i + 2] = "/"
            band[1][2 * i + 1] = "/" if g.kind == X else "\\"
            band[2][2 * i] = "/"
            band[2][2 * i + 2] = "\\"
        rows.extend(band)
        n = g.target
    return ["".join(r).rstrip() for r in rows]


def render_ascii(f: Word) -> str:
    return "\n".join(_ascii_rows(f)) + "\n"


# --------------------------------------------------------------------------
# svg


def _x(p: int) -> int:
    return PITCH * (p + 1)


def _svg_word_paths(f: Word, dx: int = 0, dy: int = 0) -> list[str]:
    out = []

    def line(x1, y1, x2, y2):
        out.append(f'<line x1="{x1 + dx}" y1="{y1 + dy}" x2="{x2 + dx}" y2="{y2 + dy}"/>')

    def curve(x1, y1, cy, x2, y2):
        out.append(f'<path d="M {x1 + dx} {y1 + dy} C {x1 + dx} {cy + dy} {x2 + dx} {cy + dy} '
                   f'{x2 + dx} {y2 + dy}"/>')

    n = f.source
    for h, g in enumerate(f.gens):
        y0, y1 = BAND * h, BAND * (h + 1)
        i = g.left
        if g.kind == CAP:
            for p in range(n):
                line(_x(p), y0, _x(p if p < i else p + 2), y1)
            curve(_x(i), y1, y0 + 10, _x(i + 1), y1)
        elif g.kind == CUP:
            for p in range(g.target):
                line(_x(p if p < i else p + 2), y0, _x(p), y1)
            curve(_x(i), y0, y1 - 10, _x(i + 1), y0)
        else:
            for p in range(n):
                if p not in (i, i + 1):
                    line(_x(p), y0, _x(p), y1)
            a, b = _x(i), _x(i + 1)
            # over strand drawn whole, under strand broken around the centre
            if g.kind == X:
                line(b, y0, a, y1)
                line(a, y0, a + 6, y0 + 10)
                line(a + 18, y0 + 30, b, y1)
            else:
                line(a, y0, b, y1)
                line(b, y0, b - 6, y0 + 10)
                line(b - 18, y0 + 30, a, y1)
        n = g.target
    if not f.gens:
        for p in range(f.source):
            line(_x(p), 0, _x(p), BAND)
    return out


def _word_size(f: Word) -> tuple[int, int]:
    return PITCH * (max(f.objects()) + 1), BAND * max(1, len(f.gens))


def _svg_doc(width: int, height: int, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">')
    style = '<g fill="none" stroke="black" stroke-width="2">'
    return "\n".join([head, style, *body, "</g>", "</svg>"]) + "\n"


def render_svg(f: Word) -> str:
    w, h = _word_size(f)
    return _svg_doc(w, h, _svg_word_paths(f))


def render_word(f: Word, format: str = "ascii") -> str:
    if format == "ascii":
        return render_ascii(f)
    if format == "svg":
        return render_svg(f)
    raise ValueError(f"unknown format {format!r}")


def render_movie(m: Movie, format: str = "ascii") -> str:
    """Every frame of a movie: stacked with captions (ascii) or side by side (svg)."""
    frames = m.frames()
    if format == "ascii":
        parts = []
        for k, f in enumerate(frames):
            parts.append(f"frame {k}: {f}")
            parts.extend(_ascii_rows(f))
            if k < len(m.slices):
                parts.append(f"  v {format_cell(m.slices[k].cell)} at {m.slices[k].pos}")
        return "\n".join(parts) + "\n"
    if format == "svg":
        body = []
        x = 0
        height = 0
        for f in frames:
            w, h = _word_size(f)
            body.extend(_svg_word_paths(f, dx=x))
            x += w + FRAME_GAP
            height = max(height, h)
        return _svg_doc(max(x - FRAME_GAP, PITCH), height, body)
    raise ValueError(f"unknown format {format!r}")
