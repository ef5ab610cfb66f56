"""User-facing interpolation over full meshes, in 1D and tensor-product 2D.

``interpolate_1d`` locates the interval of every query, builds one
interpolant per interval (cached for the call), and evaluates all queries of
an interval in a single vectorized pass.  ``interpolate_2d`` applies the 1D
routine along each axis in turn.  The pchip and linear baselines share the
same mesh and domain validation so benchmark comparisons are
apples-to-apples.
"""

from __future__ import annotations

import numpy as np
from scipy.interpolate import PchipInterpolator

from .newton import Mesh1D, build_table
from .selection import LINEAR, PCHIP, InterpConfig, build_interval_interpolant

__all__ = [
    "GridData2D",
    "interpolate_1d",
    "interpolate_2d",
    "pchip_interpolate",
    "linear_interpolate",
]


class GridData2D:
    """Tensor-product grid data: ``values[iy, ix]`` sits at ``(x[ix], y[iy])``."""

    __slots__ = ("x", "y", "values")

    def __init__(self, x, y, values):
        x = np.ascontiguousarray(x, dtype=float)
        y = np.ascontiguousarray(y, dtype=float)
        values = np.ascontiguousarray(values, dtype=float)
        for axis, pts in (("x", x), ("y", y)):
            if pts.ndim != 1 or pts.size < 2:
                raise ValueError(f"{axis} mesh must be 1D with at least two points")
            if not np.all(np.isfinite(pts)) or not np.all(np.diff(pts) > 0.0):
                raise ValueError(f"{axis} mesh must be finite and strictly increasing")
        if values.shape != (y.size, x.size):
            raise ValueError(
                f"values shape {values.shape} does not match (len(y), len(x)) = "
                f"({y.size}, {x.size})"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("grid values must be finite")
        self.x = x
        self.y = y
        self.values = values


def _check_queries(points, queries):
    q = np.atleast_1d(np.asarray(queries, dtype=float))
    if q.ndim != 1:
        raise ValueError("queries must be one-dimensional")
    if q.size and (q.min() < points[0] or q.max() > points[-1]):
        raise ValueError(
            f"query outside the source domain [{points[0]}, {points[-1]}]"
        )
    return q


def _locate(points, q):
    # Left-closed intervals; the last mesh point belongs to the last interval.
    iv = np.searchsorted(points, q, side="right") - 1
    return np.clip(iv, 0, points.size - 2)


def interpolate_1d(mesh: Mesh1D, queries, config: InterpConfig) -> np.ndarray:
    """Interpolate mesh data at the query points.

    Queries must lie inside the mesh span (no extrapolation).  For the dbi
    and ppi methods every touched interval gets its own adaptively selected
    stencil; interpolants are built once per interval and evaluated for all
    of that interval's queries together.
    """
    if config.method == PCHIP:
        return pchip_interpolate(mesh, queries)
    if config.method == LINEAR:
        return linear_interpolate(mesh, queries)
    q = _check_queries(mesh.points, queries)
    if q.size == 0:
        return np.empty(0)
    n = len(mesh)
    table = build_table(mesh, max_order=min(config.target_degree, n - 1))
    iv = _locate(mesh.points, q)
    pieces = {k: build_interval_interpolant(table, k, config) for k in np.unique(iv)}

    kmax = max(p.degree for p in pieces.values()) + 1
    coef = np.zeros((n - 1, kmax))
    nodes = np.zeros((n - 1, kmax))
    for k, p in pieces.items():
        m = len(p.coefficients)
        coef[k, :m] = p.coefficients
        nodes[k, :m] = p.nodes_x

    c = coef[iv]
    y = nodes[iv]
    acc = c[:, kmax - 1].copy()
    for k in range(kmax - 2, -1, -1):
        acc = acc * (q - y[:, k]) + c[:, k]
    return acc


def pchip_interpolate(mesh: Mesh1D, queries) -> np.ndarray:
    """Monotone piecewise-cubic Hermite baseline.

    Node slopes follow the classic limited weighted-harmonic-mean rule on
    nonuniform spacing, with zero slope at data extrema and limited one-sided
    three-point slopes at the boundaries (scipy's implementation).
    """
    q = _check_queries(mesh.points, queries)
    return PchipInterpolator(mesh.points, mesh.values)(q)


def linear_interpolate(mesh: Mesh1D, queries) -> np.ndarray:
    """Piecewise-linear baseline on the same validated mesh."""
    q = _check_queries(mesh.points, queries)
    return np.interp(q, mesh.points, mesh.values)


def interpolate_2d(grid: GridData2D, x_queries, y_queries, config: InterpConfig) -> np.ndarray:
    """Tensor-product interpolation of 2D grid data.

    One 1D sweep per axis: with ``sweep_order="xy"`` every source row is
    interpolated onto the x queries, then every resulting column onto the
    y queries.  Returns an array of shape ``(len(y_queries), len(x_queries))``.
    The sweeps are independent 1D problems on the shared axis meshes.
    """
    xq = _check_queries(grid.x, x_queries)
    yq = _check_queries(grid.y, y_queries)
    out = np.empty((yq.size, xq.size))
    if config.sweep_order == "xy":
        mid = np.empty((grid.y.size, xq.size))
        for iy in range(grid.y.size):
            mid[iy] = interpolate_1d(Mesh1D(grid.x, grid.values[iy]), xq, config)
        for k in range(xq.size):
            out[:, k] = interpolate_1d(Mesh1D(grid.y, mid[:, k]), yq, config)
    else:
        mid = np.empty((yq.size, grid.x.size))
        for ix in range(grid.x.size):
            mid[:, ix] = interpolate_1d(Mesh1D(grid.y, grid.values[:, ix]), yq, config)
        for r in range(yq.size):
            out[r] = interpolate_1d(Mesh1D(grid.x, mid[r]), xq, config)
    return out
