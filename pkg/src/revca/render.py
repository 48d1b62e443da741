"""Render a four-state configuration over the fixed window [-n, n]^2.

The window is tied to the step index rather than the bounding box so that
images at successive steps nest visually.  Rows run top to bottom from
j = +n to j = -n; columns left to right from i = -n to i = +n.
"""

from __future__ import annotations

import numpy as np

from .grid import SecondOrderState

#: cell value -> RGB for PPM output
PALETTE = {0: (255, 255, 255), 1: (0, 0, 0), 2: (128, 128, 128), 3: (255, 0, 0)}

TXT_CHARS = ".123"


def value_window(s: SecondOrderState, n: int) -> np.ndarray:
    """(2n+1, 2n+1) array of cell values, row 0 at j = +n; cells outside
    the window are dropped."""
    if n < 0:
        raise ValueError("window radius must be nonnegative")
    size = 2 * n + 1
    v = np.zeros((size, size), dtype=np.uint8)
    for weight, g in ((1, s.current), (2, s.previous)):
        ii, jj = g.index_arrays()
        keep = (np.abs(ii) <= n) & (np.abs(jj) <= n)
        v[n - jj[keep], ii[keep] + n] += weight
    return v


def render_txt(s: SecondOrderState, n: int) -> str:
    v = value_window(s, n)
    return "\n".join("".join(TXT_CHARS[x] for x in row) for row in v) + "\n"


def render_pbm(s: SecondOrderState, n: int) -> str:
    """Plain PBM (P1): nonzero cell value -> black pixel (1)."""
    v = value_window(s, n)
    h, w = v.shape
    rows = (" ".join("1" if x else "0" for x in row) for row in v)
    return f"P1\n{w} {h}\n" + "\n".join(rows) + "\n"


def render_ppm(s: SecondOrderState, n: int) -> str:
    """Plain PPM (P3) with the fixed four-color palette."""
    v = value_window(s, n)
    h, w = v.shape
    lines = [f"P3\n{w} {h}\n255"]
    for row in v:
        lines.append(" ".join(" ".join(map(str, PALETTE[x])) for x in row))
    return "\n".join(lines) + "\n"


RENDERERS = {"txt": render_txt, "pbm": render_pbm, "ppm": render_ppm}


def render(s: SecondOrderState, n: int, fmt: str) -> str:
    try:
        return RENDERERS[fmt](s, n)
    except KeyError:
        raise ValueError(f"unknown render format {fmt!r}") from None
