"""Data-bounded and positivity-preserving polynomial interpolation.

A numpy library for interpolating 1D and tensor-product 2D data on arbitrary
nonuniform meshes with hard range guarantees.  Each mesh interval gets its
own Newton-form polynomial whose stencil is grown adaptively; a growth step
is admitted only while a sufficient condition on scaled divided-difference
ratios holds, so the data-bounded method (DBI) never leaves the local data
range and the constrained positive method (PPI) never leaves a per-interval
window that preserves positivity while capping overshoot.  Monotone cubic
(pchip) and piecewise-linear baselines plus a convergence benchmark harness
round out the package.
"""

from .bench import (
    DEFAULT_LADDER,
    HIDDEN_EXTREMUM_LADDER,
    QUAD_POINTS_1D,
    QUAD_POINTS_2D,
    TEST_FUNCTIONS,
    ConvergenceRow,
    ExperimentSpec,
    TestFunction,
    l2_error,
    lgl_mesh,
    lgl_nodes,
    rows_to_csv,
    run_experiment,
    uniform_mesh,
)
from .interpolate import (
    GridData2D,
    interpolate_1d,
    interpolate_2d,
    linear_interpolate,
    pchip_interpolate,
)
from .newton import (
    DividedDifferenceTable,
    Mesh1D,
    StencilNodes,
    build_table,
    interval_geometry,
    newton_eval,
    stencil_coefficients,
)
from .selection import (
    DBI,
    LINEAR,
    METHODS,
    PCHIP,
    PPI,
    BoundLedger,
    ExtremumFlag,
    InterpConfig,
    IntervalInterpolant,
    advance_bounds,
    build_interval_interpolant,
    compute_m_bounds,
    detect_extremum,
    interval_window,
    ppi_initial_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "Mesh1D",
    "DividedDifferenceTable",
    "StencilNodes",
    "build_table",
    "stencil_coefficients",
    "newton_eval",
    "interval_geometry",
    "DBI",
    "PPI",
    "PCHIP",
    "LINEAR",
    "METHODS",
    "InterpConfig",
    "ExtremumFlag",
    "BoundLedger",
    "IntervalInterpolant",
    "detect_extremum",
    "interval_window",
    "compute_m_bounds",
    "ppi_initial_bounds",
    "advance_bounds",
    "build_interval_interpolant",
    "GridData2D",
    "interpolate_1d",
    "interpolate_2d",
    "pchip_interpolate",
    "linear_interpolate",
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
    "__version__",
]
