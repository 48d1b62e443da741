"""Exact two-state and four-state configurations on the unbounded integer lattice.

A configuration is a finite set of occupied cells (i, j) with arbitrary
signed coordinates.  Internally a :class:`BinaryGrid` keeps a dense uint8
window cropped to the tight bounding box (axis 0 is i, axis 1 is j), so
stepping and counting are vectorized; the sparse cell set is the canonical
interchange form and the basis for equality and hashing.

A four-state configuration is an ordered pair of binary grids: the cell
value is  current + 2 * previous,  so values 0..3 encode which of the two
components contain the cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np

Cell = tuple[int, int]


class MixedParityError(ValueError):
    """Grid holds cells of both (i+j) parities where one was required."""


class BinaryGrid:
    """Immutable set of occupied lattice cells with dense-window storage."""

    __slots__ = ("_a", "_imin", "_jmin")

    def __init__(self, cells: Iterable[Cell] = ()):
        cells = list(cells)
        if not cells:
            self._a = np.zeros((0, 0), dtype=np.uint8)
            self._imin = 0
            self._jmin = 0
            return
        ii = np.fromiter((c[0] for c in cells), dtype=np.int64, count=len(cells))
        jj = np.fromiter((c[1] for c in cells), dtype=np.int64, count=len(cells))
        self._init_from_indices(ii, jj)

    def _init_from_indices(self, ii: np.ndarray, jj: np.ndarray) -> None:
        imin, jmin = int(ii.min()), int(jj.min())
        a = np.zeros((int(ii.max()) - imin + 1, int(jj.max()) - jmin + 1),
                     dtype=np.uint8)
        a[ii - imin, jj - jmin] = 1
        self._a = a
        self._imin = imin
        self._jmin = jmin

    @classmethod
    def from_window(cls, a: np.ndarray, imin: int, jmin: int) -> "BinaryGrid":
        """Build from a dense 0/1 window; crops to the tight bounding box."""
        g = cls.__new__(cls)
        rows = a.any(axis=1)
        if not rows.any():
            g._a = np.zeros((0, 0), dtype=np.uint8)
            g._imin = 0
            g._jmin = 0
            return g
        cols = a.any(axis=0)
        r0, r1 = np.flatnonzero(rows)[[0, -1]]
        c0, c1 = np.flatnonzero(cols)[[0, -1]]
        g._a = np.ascontiguousarray(a[r0:r1 + 1, c0:c1 + 1], dtype=np.uint8)
        g._imin = imin + int(r0)
        g._jmin = jmin + int(c0)
        return g

    @classmethod
    def from_index_arrays(cls, ii: np.ndarray, jj: np.ndarray) -> "BinaryGrid":
        g = cls.__new__(cls)
        if len(ii) == 0:
            g._a = np.zeros((0, 0), dtype=np.uint8)
            g._imin = 0
            g._jmin = 0
        else:
            g._init_from_indices(np.asarray(ii, dtype=np.int64),
                                 np.asarray(jj, dtype=np.int64))
        return g

    @property
    def window(self) -> np.ndarray:
        """Dense 0/1 window over the bounding box (read-only view)."""
        v = self._a.view()
        v.flags.writeable = False
        return v

    @property
    def origin(self) -> Cell:
        """(imin, jmin) of the bounding box; (0, 0) for the empty grid."""
        return (self._imin, self._jmin)

    def bounds(self) -> tuple[int, int, int, int]:
        """(imin, imax, jmin, jmax); raises ValueError when empty."""
        if self._a.size == 0:
            raise ValueError("empty grid has no bounds")
        return (self._imin, self._imin + self._a.shape[0] - 1,
                self._jmin, self._jmin + self._a.shape[1] - 1)

    def index_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Occupied coordinates as parallel (i, j) integer arrays."""
        ri, rj = np.nonzero(self._a)
        return ri.astype(np.int64) + self._imin, rj.astype(np.int64) + self._jmin

    def cells(self) -> frozenset[Cell]:
        ii, jj = self.index_arrays()
        return frozenset(zip(ii.tolist(), jj.tolist()))

    def __len__(self) -> int:
        return int(self._a.sum())

    def __bool__(self) -> bool:
        return self._a.size > 0

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        r, c = i - self._imin, j - self._jmin
        if 0 <= r < self._a.shape[0] and 0 <= c < self._a.shape[1]:
            return bool(self._a[r, c])
        return False

    def __iter__(self) -> Iterator[Cell]:
        ii, jj = self.index_arrays()
        return iter(zip(ii.tolist(), jj.tolist()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryGrid):
            return NotImplemented
        return (self._imin == other._imin and self._jmin == other._jmin
                and self._a.shape == other._a.shape
                and np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash((self._imin, self._jmin, self._a.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryGrid({sorted(self.cells())!r})"


EMPTY = BinaryGrid()


def xor(a: BinaryGrid, b: BinaryGrid) -> BinaryGrid:
    """Symmetric difference of two grids (GF(2) addition of configurations)."""
    if not a:
        return b
    if not b:
        return a
    ai0, ai1, aj0, aj1 = a.bounds()
    bi0, bi1, bj0, bj1 = b.bounds()
    i0, j0 = min(ai0, bi0), min(aj0, bj0)
    out = np.zeros((max(ai1, bi1) - i0 + 1, max(aj1, bj1) - j0 + 1),
                   dtype=np.uint8)
    aw, bw = a.window, b.window
    out[ai0 - i0:ai0 - i0 + aw.shape[0], aj0 - j0:aj0 - j0 + aw.shape[1]] ^= aw
    out[bi0 - i0:bi0 - i0 + bw.shape[0], bj0 - j0:bj0 - j0 + bw.shape[1]] ^= bw
    return BinaryGrid.from_window(out, i0, j0)


def shift(g: BinaryGrid, dx: int, dy: int) -> BinaryGrid:
    """Translate every cell (i, j) to (i + dx, j + dy)."""
    if not g:
        return g
    out = BinaryGrid.__new__(BinaryGrid)
    out._a = g._a
    out._imin = g._imin + dx
    out._jmin = g._jmin + dy
    return out


def diagonal_embed(g: BinaryGrid, parity: str = "even") -> BinaryGrid:
    """Map the full lattice onto one diagonal sublattice.

    even: (i, j) -> (i+j, i-j); odd: (i, j) -> (i+j+1, i-j).  Image cells
    all have coordinate sum of the requested parity.
    """
    _check_parity_arg(parity)
    ii, jj = g.index_arrays()
    if parity == "even":
        return BinaryGrid.from_index_arrays(ii + jj, ii - jj)
    return BinaryGrid.from_index_arrays(ii + jj + 1, ii - jj)


def diagonal_extract(g: BinaryGrid, parity: str = "even") -> BinaryGrid:
    """Inverse of :func:`diagonal_embed` on its image.

    Raises :class:`MixedParityError` if any cell of ``g`` has the wrong
    (i+j) parity, i.e. the configuration is not confined to one sublattice.
    """
    _check_parity_arg(parity)
    uu, vv = g.index_arrays()
    want = 0 if parity == "even" else 1
    if len(uu) and not np.all((uu + vv) % 2 == want):
        raise MixedParityError(
            f"grid has cells outside the {parity} diagonal sublattice")
    if parity == "even":
        return BinaryGrid.from_index_arrays((uu + vv) // 2, (uu - vv) // 2)
    return BinaryGrid.from_index_arrays((uu + vv - 1) // 2, (uu - vv - 1) // 2)


def _check_parity_arg(parity: str) -> None:
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class SecondOrderState:
    """Pair (current, previous); cell value = current + 2 * previous."""

    current: BinaryGrid
    previous: BinaryGrid


class CountRecord(NamedTuple):
    n: int
    r1: int
    r2: int
    r3: int
    total: int


def single_seed() -> SecondOrderState:
    """One cell of value 1 at the origin, everything else zero."""
    return SecondOrderState(BinaryGrid([(0, 0)]), EMPTY)


def swap_x(s: SecondOrderState) -> SecondOrderState:
    """Exchange current and previous components (values 1 <-> 2)."""
    return SecondOrderState(s.previous, s.current)


def count_values(s: SecondOrderState, n: int = 0) -> CountRecord:
    """Tally cells of value 1, 2, 3 in a state; ``n`` is caller-supplied."""
    cur, prev = s.current, s.previous
    if not cur and not prev:
        return CountRecord(n, 0, 0, 0, 0)
    if not cur or not prev:
        r1, r2 = len(cur), len(prev)
        return CountRecord(n, r1, r2, 0, r1 + r2)
    ci0, ci1, cj0, cj1 = cur.bounds()
    pi0, pi1, pj0, pj1 = prev.bounds()
    i0, j0 = min(ci0, pi0), min(cj0, pj0)
    shape = (max(ci1, pi1) - i0 + 1, max(cj1, pj1) - j0 + 1)
    c = np.zeros(shape, dtype=np.uint8)
    p = np.zeros(shape, dtype=np.uint8)
    cw, pw = cur.window, prev.window
    c[ci0 - i0:ci0 - i0 + cw.shape[0], cj0 - j0:cj0 - j0 + cw.shape[1]] = cw
    p[pi0 - i0:pi0 - i0 + pw.shape[0], pj0 - j0:pj0 - j0 + pw.shape[1]] = pw
    r3 = int((c & p).sum())
    r1 = int(c.sum()) - r3
    r2 = int(p.sum()) - r3
    return CountRecord(n, r1, r2, r3, r1 + r2 + r3)


# --- text interchange format ------------------------------------------------

def grid_to_text(g: BinaryGrid) -> str:
    """Serialize: header '#bgrid v1 count=N', then sorted 'i j' lines."""
    lines = [f"#bgrid v1 count={len(g)}"]
    lines.extend(f"{i} {j}" for i, j in sorted(g.cells()))
    return "\n".join(lines) + "\n"


def grid_from_text(text: str) -> BinaryGrid:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#bgrid v1"):
        raise ValueError("missing '#bgrid v1' header")
    cells = []
    for ln in lines[1:]:
        i, j = ln.split()
        cells.append((int(i), int(j)))
    declared = lines[0].split("count=")[1]
    if int(declared) != len(cells):
        raise ValueError(f"header count={declared} but {len(cells)} cells")
    return BinaryGrid(cells)
