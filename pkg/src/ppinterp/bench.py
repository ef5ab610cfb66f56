"""Convergence benchmark harness.

Provides the four reference test functions, uniform and spectral-element
(LGL) mesh generators, trapezoid-rule L2 error norms, and a driver that runs
a resolution ladder for one (function, mesh family, method, degree)
combination and reports errors with convergence rates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .interpolate import GridData2D, interpolate_1d, interpolate_2d
from .newton import Mesh1D
from .selection import METHODS, InterpConfig

__all__ = [
    "TestFunction",
    "TEST_FUNCTIONS",
    "uniform_mesh",
    "lgl_nodes",
    "lgl_mesh",
    "l2_error",
    "ConvergenceRow",
    "ExperimentSpec",
    "run_experiment",
    "rows_to_csv",
    "QUAD_POINTS_1D",
    "QUAD_POINTS_2D",
    "DEFAULT_LADDER",
    "HIDDEN_EXTREMUM_LADDER",
]

# Trapezoid-rule grids for the L2 norms: 1e4 points in 1D, 1e3 per axis in 2D.
QUAD_POINTS_1D = 10_000
QUAD_POINTS_2D = 1_000

DEFAULT_LADDER = (17, 33, 65, 129, 257)
# Even point counts put the origin mid-interval, hiding the extremum of the
# symmetric test functions between two data points.
HIDDEN_EXTREMUM_LADDER = (16, 32, 64, 128, 256)


@dataclass(frozen=True)
class TestFunction:
    """A benchmark function with its per-axis domain."""

    name: str
    arity: int
    domain: tuple[tuple[float, float], ...]
    fn: callable = field(repr=False)

    def __call__(self, *coords):
        return self.fn(*coords)


def _runge_1d(x):
    return 1.0 / (1.0 + 25.0 * x**2)


def _steep_step_1d(x, k=100.0):
    return 1.0 / (1.0 + np.exp(-2.0 * k * x))


def _runge_2d(x, y):
    return 1.0 / (1.0 + 25.0 * (x**2 + y**2))


def _steep_step_2d(x, y, k=100.0):
    return 1.0 / (1.0 + np.exp(-math.sqrt(2.0) * k * (x + y)))


TEST_FUNCTIONS = {
    "f1": TestFunction("f1", 1, ((-1.0, 1.0),), _runge_1d),
    "f2": TestFunction("f2", 1, ((-0.2, 0.2),), _steep_step_1d),
    "f7": TestFunction("f7", 2, ((-1.0, 1.0), (-1.0, 1.0)), _runge_2d),
    "f10": TestFunction("f10", 2, ((-0.2, 0.2), (-0.2, 0.2)), _steep_step_2d),
}


def uniform_mesh(domain, n: int) -> np.ndarray:
    """``n`` equispaced points covering ``domain`` inclusive of both ends."""
    a, b = domain
    if n < 2:
        raise ValueError("a mesh needs at least two points")
    return np.linspace(a, b, n)


def lgl_nodes(p: int, tol: float = 1e-15, max_iter: int = 100) -> np.ndarray:
    """The ``p`` Legendre-Gauss-Lobatto nodes on [-1, 1].

    These are the roots of ``(1 - x^2) P'_{p-1}(x)``: the endpoints plus the
    extrema of the Legendre polynomial of degree ``p - 1``.  Computed by the
    classic damped Newton iteration started from the Chebyshev-Gauss-Lobatto
    points, iterated to machine-level residuals.
    """
    if p < 2:
        raise ValueError("need at least the two endpoint nodes")
    if p == 2:
        return np.array([-1.0, 1.0])
    deg = p - 1
    x = -np.cos(np.pi * np.arange(p) / deg)
    legendre = np.zeros((p, p))
    x_old = np.full(p, 2.0)
    for _ in range(max_iter):
        if np.max(np.abs(x - x_old)) <= tol:
            break
        x_old = x
        legendre[:, 0] = 1.0
        legendre[:, 1] = x
        for k in range(2, p):
            legendre[:, k] = ((2 * k - 1) * x * legendre[:, k - 1] - (k - 1) * legendre[:, k - 2]) / k
        x = x_old - (x * legendre[:, deg] - legendre[:, deg - 1]) / (p * legendre[:, deg])
    else:
        raise RuntimeError(f"LGL node iteration did not converge for p={p}")
    x[0], x[-1] = -1.0, 1.0
    # Symmetrize: the node set is exactly symmetric about the origin.
    x = 0.5 * (x - x[::-1])
    if p % 2 == 1:
        x[deg // 2] = 0.0
    return x


def lgl_mesh(domain, n: int, nodes_per_element: int = 9) -> np.ndarray:
    """Spectral-element mesh: equal-width elements carrying LGL point sets.

    Element interiors use ``nodes_per_element`` LGL nodes mapped affinely;
    shared element endpoints are counted once, so ``(n - 1)`` must be
    divisible by ``nodes_per_element - 1`` and the result has exactly ``n``
    points including both domain endpoints.
    """
    a, b = domain
    per = nodes_per_element - 1
    if n < 2 or (n - 1) % per != 0:
        raise ValueError(
            f"LGL mesh needs (n - 1) divisible by {per}, got n = {n}"
        )
    n_elem = (n - 1) // per
    breaks = np.linspace(a, b, n_elem + 1)
    ref = lgl_nodes(nodes_per_element)
    pts = np.empty(n)
    for e in range(n_elem):
        lo, hi = breaks[e], breaks[e + 1]
        mapped = 0.5 * (lo + hi) + 0.5 * (hi - lo) * ref
        mapped[0], mapped[-1] = lo, hi
        pts[e * per : (e + 1) * per] = mapped[:-1]
    pts[-1] = b
    return pts


def l2_error(func: TestFunction, approx: np.ndarray, grid) -> float:
    """Trapezoid-rule L2 norm of ``approx`` minus the exact function.

    ``grid`` is the evaluation abscissae for 1D functions or an ``(xs, ys)``
    pair for 2D, where ``approx[iy, ix]`` corresponds to ``(xs[ix], ys[iy])``.
    """
    if func.arity == 1:
        xs = np.asarray(grid, dtype=float)
        err2 = (approx - func(xs)) ** 2
        return float(np.sqrt(np.trapezoid(err2, xs)))
    xs, ys = (np.asarray(g, dtype=float) for g in grid)
    exact = func(xs[None, :], ys[:, None])
    err2 = (approx - exact) ** 2
    return float(np.sqrt(np.trapezoid(np.trapezoid(err2, xs, axis=1), ys)))


@dataclass
class ConvergenceRow:
    """One ladder entry: point count, L2 error, and rate vs the previous row."""

    ni: int
    l2_error: float
    rate: float | None = None


@dataclass
class ExperimentSpec:
    """One convergence study: function, mesh family, method, degree, ladder."""

    function: str
    mesh: str = "uniform"
    method: str = "ppi"
    degree: int = 3
    epsilon: float = 0.01
    ni_list: tuple[int, ...] = DEFAULT_LADDER
    sweep_order: str = "xy"
    quad_points: int | None = None

    def validate(self):
        if self.function not in TEST_FUNCTIONS:
            raise ValueError(f"unknown function {self.function!r}")
        if self.mesh not in ("uniform", "lgl"):
            raise ValueError(f"unknown mesh family {self.mesh!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        if not self.ni_list:
            raise ValueError("empty resolution ladder")
        for ni in self.ni_list:
            mesh_points(self.mesh, (-1.0, 1.0), ni)  # raises on a bad count


def mesh_points(family: str, domain, n: int) -> np.ndarray:
    if family == "uniform":
        return uniform_mesh(domain, n)
    if family == "lgl":
        return lgl_mesh(domain, n)
    raise ValueError(f"unknown mesh family {family!r}")


def _config(spec: ExperimentSpec) -> InterpConfig:
    return InterpConfig(
        method=spec.method,
        target_degree=spec.degree,
        epsilon=spec.epsilon,
        sweep_order=spec.sweep_order,
    )


def run_experiment(spec: ExperimentSpec) -> list[ConvergenceRow]:
    """Run the ladder and return one row per resolution.

    For each point count the test function is sampled on the requested mesh,
    interpolated onto the uniform L2 evaluation grid, and compared against
    the exact values.  Rates use the maximum mesh spacing:
    ``log(e_prev / e) / log(h_prev / h)``.
    """
    spec.validate()
    func = TEST_FUNCTIONS[spec.function]
    config = _config(spec)
    rows: list[ConvergenceRow] = []
    h_prev = err_prev = None
    for ni in spec.ni_list:
        if func.arity == 1:
            (dom,) = func.domain
            pts = mesh_points(spec.mesh, dom, ni)
            mesh = Mesh1D(pts, func(pts))
            nq = spec.quad_points or QUAD_POINTS_1D
            xs = np.linspace(dom[0], dom[1], nq)
            approx = interpolate_1d(mesh, xs, config)
            err = l2_error(func, approx, xs)
            h = float(np.max(np.diff(pts)))
        else:
            dom_x, dom_y = func.domain
            px = mesh_points(spec.mesh, dom_x, ni)
            py = mesh_points(spec.mesh, dom_y, ni)
            grid = GridData2D(px, py, func(px[None, :], py[:, None]))
            nq = spec.quad_points or QUAD_POINTS_2D
            xs = np.linspace(dom_x[0], dom_x[1], nq)
            ys = np.linspace(dom_y[0], dom_y[1], nq)
            approx = interpolate_2d(grid, xs, ys, config)
            err = l2_error(func, approx, (xs, ys))
            h = float(max(np.max(np.diff(px)), np.max(np.diff(py))))
        rate = None
        if err_prev is not None and err_prev > 0.0 and err > 0.0:
            rate = math.log(err_prev / err) / math.log(h_prev / h)
        rows.append(ConvergenceRow(ni=ni, l2_error=err, rate=rate))
        h_prev, err_prev = h, err
    return rows


CSV_HEADER = "function,mesh,method,degree,ni,l2_error,rate"


def rows_to_csv(spec: ExperimentSpec, rows: list[ConvergenceRow]) -> str:
    """Render ladder rows as CSV text (deterministic for identical specs)."""
    lines = [CSV_HEADER]
    for row in rows:
        rate = "" if row.rate is None else f"{row.rate:.2f}"
        lines.append(
            f"{spec.function},{spec.mesh},{spec.method},{spec.degree},"
            f"{row.ni},{row.l2_error:.5E},{rate}"
        )
    return "\n".join(lines) + "\n"
