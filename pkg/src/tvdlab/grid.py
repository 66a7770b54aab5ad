"""Uniform square Cartesian grids and cell-average fields.

Index convention used throughout the package: cells are addressed by
1-based pairs (i, j) with i running along x and j along y; cell (i, j)
has centroid (xmin + (i - 1/2) dx, ymin + (j - 1/2) dx).  Arrays store
cell data with axis 0 = i and axis 1 = j, so ``values[i - 1, j - 1]``
is the average on cell (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

# Relative mismatch between dx and dy above which cells are not square.
_SQUARE_TOL = 1e-12


@dataclass(frozen=True)
class Grid:
    """n-by-n partition of [xmin, xmax] x [ymin, ymax] into square cells."""

    n: int
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"grid needs at least 2 cells per side, got n={self.n}")
        wx = (self.xmax - self.xmin) / self.n
        wy = (self.ymax - self.ymin) / self.n
        if not (wx > 0.0 and wy > 0.0):
            raise ValueError("grid bounds must have positive extent")
        if abs(wx - wy) > _SQUARE_TOL * max(wx, wy):
            raise ValueError(f"cells must be square, got dx={wx!r} dy={wy!r}")

    @property
    def dx(self) -> float:
        return (self.xmax - self.xmin) / self.n

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        """1D arrays of cell-center coordinates along x and y."""
        x = self.xmin + (np.arange(self.n) + 0.5) * self.dx
        y = self.ymin + (np.arange(self.n) + 0.5) * self.dx
        return x, y

    def cell_edges(self) -> tuple[np.ndarray, np.ndarray]:
        """1D arrays of the n+1 cell-boundary coordinates along x and y."""
        x = self.xmin + np.arange(self.n + 1) * self.dx
        y = self.ymin + np.arange(self.n + 1) * self.dx
        return x, y


def make_grid(n: int, bounds: tuple[float, float, float, float]) -> Grid:
    """Build a Grid from (xmin, xmax, ymin, ymax); cells must come out square."""
    xmin, xmax, ymin, ymax = (float(b) for b in bounds)
    return Grid(n=int(n), xmin=xmin, xmax=xmax, ymin=ymin, ymax=ymax)


@dataclass(frozen=True)
class CellField:
    """Per-cell scalar averages U_{i,j} over a Grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (self.grid.n, self.grid.n):
            raise ValueError(
                f"values must be {self.grid.n}x{self.grid.n}, got {vals.shape}"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("cell values must all be finite")
        object.__setattr__(self, "values", vals)


def write_cell_field(field: CellField, path: str | Path) -> None:
    """Write a CellField as text: header line, then ``i,j,value`` rows.

    Values are written with repr precision so a read round-trips bitwise.
    """
    g = field.grid
    lines = [f"# n={g.n} xmin={g.xmin!r} xmax={g.xmax!r} ymin={g.ymin!r} ymax={g.ymax!r}"]
    for i in range(g.n):
        for j in range(g.n):
            lines.append(f"{i + 1},{j + 1},{field.values[i, j]!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_cell_field(path: str | Path) -> CellField:
    """Read a CellField written by :func:`write_cell_field`."""
    text = Path(path).read_text().strip().splitlines()
    if not text or not text[0].startswith("#"):
        raise ValueError(f"{path}: missing '# n=... xmin=...' header line")
    header = dict(tok.split("=", 1) for tok in text[0][1:].split())
    try:
        n = int(header["n"])
        grid = Grid(
            n=n,
            xmin=float(header["xmin"]),
            xmax=float(header["xmax"]),
            ymin=float(header["ymin"]),
            ymax=float(header["ymax"]),
        )
    except KeyError as exc:
        raise ValueError(f"{path}: header missing key {exc}") from exc
    values = np.empty((n, n))
    seen = 0
    for line in text[1:]:
        line = line.strip()
        if not line:
            continue
        i_s, j_s, v_s = line.split(",")
        values[int(i_s) - 1, int(j_s) - 1] = float(v_s)
        seen += 1
    if seen != n * n:
        raise ValueError(f"{path}: expected {n * n} cell rows, found {seen}")
    return CellField(grid=grid, values=values)
