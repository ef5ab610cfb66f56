"""Newton-form interpolation machinery on nonuniform 1D meshes.

This module holds the building blocks shared by every interval of a mesh:
the validated mesh itself, the triangular table of divided differences, and
stencils recorded in insertion order together with Newton-form evaluation.
A table is immutable once built, so it can be shared freely between the
per-interval construction routines (including across threads).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Mesh1D",
    "DividedDifferenceTable",
    "StencilNodes",
    "build_table",
    "stencil_coefficients",
    "newton_eval",
    "interval_geometry",
]


class Mesh1D:
    """Strictly increasing sample abscissae with one data value per point.

    Raises ``ValueError`` for meshes that would poison the divided-difference
    recursion: repeated or decreasing abscissae (zero denominators), length
    mismatches, fewer than two points, or non-finite entries.
    """

    __slots__ = ("points", "values")

    def __init__(self, points, values):
        points = np.ascontiguousarray(points, dtype=float)
        values = np.ascontiguousarray(values, dtype=float)
        if points.ndim != 1 or values.ndim != 1:
            raise ValueError("mesh points and values must be one-dimensional")
        if points.size != values.size:
            raise ValueError(
                f"mesh size mismatch: {points.size} points vs {values.size} values"
            )
        if points.size < 2:
            raise ValueError("a mesh needs at least two points")
        if not (np.all(np.isfinite(points)) and np.all(np.isfinite(values))):
            raise ValueError("mesh points and values must be finite")
        if not np.all(np.diff(points) > 0.0):
            raise ValueError("mesh points must be strictly increasing")
        points.setflags(write=False)
        values.setflags(write=False)
        self.points = points
        self.values = values

    def __len__(self):
        return self.points.size

    @property
    def n_intervals(self) -> int:
        return self.points.size - 1

    def __repr__(self):
        return f"Mesh1D(n={self.points.size}, span=[{self.points[0]}, {self.points[-1]}])"


class DividedDifferenceTable:
    """Triangular table of Newton divided differences over a mesh.

    ``rows[j]`` holds all order-``j`` differences: ``rows[j][i]`` is the
    difference over ``points[i : i + j + 1]``.  Row 0 is the data itself, and
    each higher row follows the recursion
    ``rows[j][i] = (rows[j-1][i+1] - rows[j-1][i]) / (points[i+j] - points[i])``.

    Instances are read-only after construction; every interval of the mesh
    works from the same shared table.
    """

    __slots__ = ("mesh", "rows", "_rows_list", "_points_list")

    def __init__(self, mesh: Mesh1D, rows):
        self.mesh = mesh
        for r in rows:
            r.setflags(write=False)
        self.rows = tuple(rows)
        # Plain-list mirrors keep the per-interval search loops off numpy
        # scalar overhead.
        self._rows_list = [r.tolist() for r in self.rows]
        self._points_list = mesh.points.tolist()

    @property
    def max_order(self) -> int:
        return len(self.rows) - 1

    def diff(self, i: int, j: int) -> float:
        """Divided difference of order ``j`` starting at point ``i``."""
        return float(self.rows[j][i])


def build_table(mesh: Mesh1D, max_order: int | None = None) -> DividedDifferenceTable:
    """Compute the divided-difference table for ``mesh``.

    By default all orders ``0 .. n-1`` are produced.  ``max_order`` truncates
    the table for large meshes when only low-degree interpolants are needed;
    it is clamped to ``n-1`` and must allow at least the first-order row.
    """
    x = mesh.points
    n = x.size
    if max_order is None:
        max_order = n - 1
    max_order = min(int(max_order), n - 1)
    if max_order < 1:
        raise ValueError("table needs at least the first-order differences")
    rows = [mesh.values.copy()]
    for j in range(1, max_order + 1):
        rows.append((rows[-1][1:] - rows[-1][:-1]) / (x[j:] - x[:-j]))
    return DividedDifferenceTable(mesh, rows)


class StencilNodes:
    """Contiguous mesh indices backing one interval, in insertion order.

    The stencil for interval ``i`` always starts as ``(i, i+1)`` and grows one
    point at a time, prepending ``left-1`` or appending ``right+1``, so every
    prefix of the insertion sequence covers a contiguous index range.
    """

    __slots__ = ("indices", "left", "right")

    def __init__(self, interval_index: int):
        self.indices = [interval_index, interval_index + 1]
        self.left = interval_index
        self.right = interval_index + 1

    def grow_left(self) -> int:
        self.left -= 1
        self.indices.append(self.left)
        return self.left

    def grow_right(self) -> int:
        self.right += 1
        self.indices.append(self.right)
        return self.right

    def __len__(self):
        return len(self.indices)

    def __repr__(self):
        return f"StencilNodes({self.indices})"


def stencil_coefficients(stencil: StencilNodes, table: DividedDifferenceTable) -> list[float]:
    """Newton coefficients for the insertion-ordered stencil.

    The ``k``-th coefficient is the divided difference over the first ``k+1``
    inserted nodes.  Because every prefix is contiguous, that difference sits
    in the table at order ``k``, starting at the smallest index seen so far.
    """
    rows = table.rows
    lo = stencil.indices[0]
    coeffs = []
    for k, idx in enumerate(stencil.indices):
        if idx < lo:
            lo = idx
        coeffs.append(float(rows[k][lo]))
    return coeffs


def newton_eval(stencil: StencilNodes, table: DividedDifferenceTable, x):
    """Evaluate the Newton-form interpolant of a stencil at ``x``.

    Uses nested (Horner-style) multiplication over the insertion-ordered
    nodes, which reproduces the node values to machine precision and accepts
    scalar or array ``x``.
    """
    pts = table.mesh.points
    coeffs = stencil_coefficients(stencil, table)
    xq = np.asarray(x, dtype=float)
    acc = np.full(xq.shape, coeffs[-1])
    for k in range(len(coeffs) - 2, -1, -1):
        acc = acc * (xq - pts[stencil.indices[k]]) + coeffs[k]
    if np.isscalar(x) or xq.ndim == 0:
        return float(acc)
    return acc


def interval_geometry(stencil: StencilNodes, mesh: Mesh1D, j: int) -> tuple[float, float]:
    """Normalized geometry pair ``(t_j, d_j)`` for growth step ``j >= 1``.

    ``t_j`` is the offset of the ``j``-th inserted node from the interval's
    left end, and ``d_j`` the width of the first ``j+2`` inserted nodes, both
    in units of the interval width.  Neither depends on the evaluation point.
    """
    if j < 1:
        raise ValueError("step index must be >= 1")
    if len(stencil.indices) < j + 2:
        raise ValueError(f"stencil has no step {j}")
    pts = mesh.points
    i = stencil.indices[0]
    h = pts[i + 1] - pts[i]
    t = (pts[stencil.indices[j]] - pts[i]) / h
    prefix = stencil.indices[: j + 2]
    d = (pts[max(prefix)] - pts[min(prefix)]) / h
    return float(t), float(d)
