"""Analytic shape catalogue and cell-average projection.

Shapes are the initial profiles used by the TV studies and the PDE runs:
a narrow Gaussian, axis-aligned and rotated unit square pulses, compactly
supported cosine hills (circular and elliptic), and constants.  Every
shape may carry a rotation angle ``theta``; evaluation applies
``u(x cos(theta) + y sin(theta), -x sin(theta) + y cos(theta))``,
i.e. a counterclockwise rotation of the shape about the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

import numpy as np

from .grid import CellField, Grid

SHAPE_KINDS = (
    "gaussian",
    "square_pulse",
    "rotated_square_pulse",
    "cosine_hill",
    "elliptic_hill",
    "burgers_hill",
    "constant",
)

# Per-kind defaults mirroring the experiment definitions: (center, size).
# "size" is the Gaussian e-folding width, the pulse half-width, or the
# hill support radius depending on the kind.
_DEFAULTS = {
    "gaussian": ((0.0, 0.0), 0.15),
    "square_pulse": ((0.0, 0.0), 1.0 / np.sqrt(2.0)),
    "rotated_square_pulse": ((0.0, 0.0), 1.0 / np.sqrt(2.0)),
    "cosine_hill": ((0.25, 0.25), 0.25),
    "elliptic_hill": ((0.0, 0.0), 0.25),
    "burgers_hill": ((-0.5, -0.5), 0.25),
    "constant": ((0.0, 0.0), 1.0),
}

# Ellipse quadratic form q = ax*x^2 + ay*y^2; the hill is cos(2 pi q) on
# q <= size. With size = 1/4 the profile reaches zero exactly on the rim.
_ELLIPSE_AX = 0.5
_ELLIPSE_AY = 1.5


@dataclass(frozen=True)
class ShapeSpec:
    """An analytic shape: kind plus center/size/rotation/value parameters."""

    kind: str
    center: tuple[float, float] = (0.0, 0.0)
    size: float = 1.0
    theta: float = 0.0
    value: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in SHAPE_KINDS:
            raise ValueError(f"unknown shape kind {self.kind!r}")
        if self.kind != "constant" and not self.size > 0.0:
            raise ValueError(f"shape size must be positive, got {self.size!r}")

    def rotated(self, dtheta: float) -> "ShapeSpec":
        """The same shape rotated counterclockwise by an extra angle."""
        return replace(self, theta=self.theta + dtheta)


def shape(kind: str, **overrides) -> ShapeSpec:
    """Build a ShapeSpec with the catalogue defaults for ``kind``."""
    if kind not in _DEFAULTS:
        raise ValueError(f"unknown shape kind {kind!r}")
    center, size = _DEFAULTS[kind]
    params = {"center": center, "size": size}
    if kind == "rotated_square_pulse":
        params["theta"] = np.pi / 4.0
    params.update(overrides)
    return ShapeSpec(kind=kind, **params)


def evaluate_shape(spec: ShapeSpec, x, y):
    """Pointwise shape value; ``x`` and ``y`` may be scalars or arrays."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if spec.theta != 0.0:
        c, s = np.cos(spec.theta), np.sin(spec.theta)
        x, y = x * c + y * s, -x * s + y * c
    cx, cy = spec.center
    kind = spec.kind
    if kind == "constant":
        return np.broadcast_to(np.asarray(spec.value, dtype=float), x.shape).copy()
    if kind == "gaussian":
        r2 = (x - cx) ** 2 + (y - cy) ** 2
        return np.exp(-r2 / spec.size**2)
    if kind in ("square_pulse", "rotated_square_pulse"):
        inside = (np.abs(x - cx) <= spec.size) & (np.abs(y - cy) <= spec.size)
        return np.where(inside, 1.0, 0.0)
    if kind in ("cosine_hill", "burgers_hill"):
        r = np.sqrt((x - cx) ** 2 + (y - cy) ** 2)
        return np.where(r <= spec.size, np.cos(0.5 * np.pi * r / spec.size), 0.0)
    if kind == "elliptic_hill":
        q = _ELLIPSE_AX * (x - cx) ** 2 + _ELLIPSE_AY * (y - cy) ** 2
        return np.where(q <= spec.size, np.cos(2.0 * np.pi * q), 0.0)
    raise ValueError(f"unknown shape kind {kind!r}")


def is_discontinuous(spec: ShapeSpec) -> bool:
    return spec.kind in ("square_pulse", "rotated_square_pulse")


def gauss_legendre_1d(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1]."""
    if order < 1:
        raise ValueError("quadrature order must be >= 1")
    return np.polynomial.legendre.leggauss(order)


def project_cell_averages(spec: ShapeSpec, grid: Grid, quad_order: int = 4) -> CellField:
    """Cell averages of a shape on every cell of the grid.

    Smooth shapes use per-cell tensor Gauss-Legendre quadrature of the
    given order.  Square pulses (any rotation) are indicator functions of
    a square, so their averages are computed exactly as the overlap area
    of the rotated square with each cell, divided by the cell area;
    quadrature of the discontinuous integrand would pollute the
    closed-form TV checks.
    """
    if quad_order < 1:
        raise ValueError("quadrature order must be >= 1")
    if spec.kind == "constant":
        values = np.full((grid.n, grid.n), float(spec.value))
        return CellField(grid=grid, values=values)
    if is_discontinuous(spec):
        return _project_square_pulse(spec, grid)
    return _project_by_quadrature(spec, grid, quad_order)


def _project_by_quadrature(spec: ShapeSpec, grid: Grid, quad_order: int) -> CellField:
    nodes, weights = gauss_legendre_1d(quad_order)
    xc, yc = grid.cell_centers()
    half = 0.5 * grid.dx
    # Quadrature abscissae per cell: shape (n, order) along each axis.
    xq = xc[:, None] + half * nodes[None, :]
    yq = yc[:, None] + half * nodes[None, :]
    xx = xq[:, None, :, None]
    yy = yq[None, :, None, :]
    vals = evaluate_shape(spec, np.broadcast_to(xx, (grid.n, grid.n, quad_order, quad_order)),
                          np.broadcast_to(yy, (grid.n, grid.n, quad_order, quad_order)))
    w2 = weights[:, None] * weights[None, :]
    # Average over the cell: quadrature weights on [-1,1]^2 sum to 4.
    means = np.tensordot(vals, w2, axes=([2, 3], [0, 1])) / 4.0
    return CellField(grid=grid, values=means)


def _project_square_pulse(spec: ShapeSpec, grid: Grid) -> CellField:
    w = spec.size
    cx, cy = spec.center
    theta = spec.theta % (2.0 * np.pi)
    xe, ye = grid.cell_edges()
    axis_aligned = (
        min(theta % (0.5 * np.pi), 0.5 * np.pi - theta % (0.5 * np.pi)) < 1e-14
    )
    if axis_aligned and spec.center == (0.0, 0.0):
        # Separable exact overlap: coverage fraction per axis, then product.
        fx = _interval_coverage(xe, -w, w) / grid.dx
        fy = _interval_coverage(ye, -w, w) / grid.dx
        return CellField(grid=grid, values=fx[:, None] * fy[None, :])
    # General case: clip the rotated square against each cell.
    c, s = np.cos(theta), np.sin(theta)
    # Shape support corners in lab coordinates (rotate shape ccw by theta).
    corners_shape = np.array(
        [[cx - w, cy - w], [cx + w, cy - w], [cx + w, cy + w], [cx - w, cy + w]]
    )
    rot = np.array([[c, -s], [s, c]])
    corners = corners_shape @ rot.T
    n = grid.n
    values = np.empty((n, n))
    area = grid.dx * grid.dx
    for i in range(n):
        for j in range(n):
            values[i, j] = _clip_area(corners, xe[i], xe[i + 1], ye[j], ye[j + 1]) / area
    return CellField(grid=grid, values=values)


def _interval_coverage(edges: np.ndarray, lo: float, hi: float) -> np.ndarray:
    left = np.maximum(edges[:-1], lo)
    right = np.minimum(edges[1:], hi)
    return np.maximum(right - left, 0.0)


def _clip_area(poly: np.ndarray, x0: float, x1: float, y0: float, y1: float) -> float:
    """Area of a convex polygon clipped to the box [x0,x1] x [y0,y1]."""
    pts: Iterable = poly
    for axis, bound, keep_less in (
        (0, x1, True), (0, x0, False), (1, y1, True), (1, y0, False),
    ):
        out = []
        pts = list(pts)
        m = len(pts)
        if m == 0:
            return 0.0
        for k in range(m):
            p, q = pts[k], pts[(k + 1) % m]
            p_in = (p[axis] <= bound) if keep_less else (p[axis] >= bound)
            q_in = (q[axis] <= bound) if keep_less else (q[axis] >= bound)
            if p_in:
                out.append(p)
            if p_in != q_in:
                t = (bound - p[axis]) / (q[axis] - p[axis])
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        pts = out
    pts = list(pts)
    if len(pts) < 3:
        return 0.0
    arr = np.asarray(pts)
    x, y = arr[:, 0], arr[:, 1]
    return 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
