"""Adaptive per-interval stencil selection for bounded interpolation.

For each mesh interval the stencil starts from the interval's two endpoints
and is grown one mesh point at a time.  A growth step is accepted only when
the running product of scaled divided-difference ratios stays inside a
recursively maintained admissibility window; this is the sufficient condition
that keeps the resulting polynomial inside the interval's data range (DBI
mode) or inside a relaxed window that preserves positivity while limiting
overshoot (PPI mode).  When neither neighbor can be admitted the growth stops
and the interval falls back to whatever degree it reached, with degree 1 as
the floor.

Everything here is a pure function of the shared read-only table; one
:class:`BoundLedger` per interval is the only running state, so intervals may
be processed concurrently without synchronization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .newton import DividedDifferenceTable, StencilNodes

__all__ = [
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
]

DBI = "dbi"
PPI = "ppi"
PCHIP = "pchip"
LINEAR = "linear"
METHODS = (DBI, PPI, PCHIP, LINEAR)


class InterpConfig:
    """Method selector plus the knobs shared by all intervals.

    Parameters
    ----------
    method : str
        One of ``"dbi"``, ``"ppi"``, ``"pchip"``, ``"linear"``.
    target_degree : int
        Largest polynomial degree attempted per interval (``d >= 1``).  The
        stencil stops growing once it holds ``d + 1`` points.  Ignored by the
        pchip (always cubic) and linear baselines.
    epsilon : float
        PPI window relaxation for intervals without a detected extremum; 0
        collapses the PPI window onto the DBI one.
    sweep_order : str
        Axis order for tensor-product 2D interpolation, ``"xy"`` (default,
        x first) or ``"yx"``.
    """

    __slots__ = ("method", "target_degree", "epsilon", "sweep_order")

    def __init__(self, method=PPI, target_degree=3, epsilon=0.01, sweep_order="xy"):
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
        target_degree = int(target_degree)
        if target_degree < 1:
            raise ValueError("target degree must be at least 1")
        if epsilon < 0.0:
            raise ValueError("epsilon must be nonnegative")
        if sweep_order not in ("xy", "yx"):
            raise ValueError("sweep_order must be 'xy' or 'yx'")
        self.method = method
        self.target_degree = target_degree
        self.epsilon = float(epsilon)
        self.sweep_order = sweep_order

    def __repr__(self):
        return (
            f"InterpConfig(method={self.method!r}, target_degree={self.target_degree}, "
            f"epsilon={self.epsilon}, sweep_order={self.sweep_order!r})"
        )


class ExtremumFlag(enum.Enum):
    """Classification of an interval from the signs of neighboring slopes.

    ``DIP``: slopes fall entering the interval and rise leaving it, so the
    underlying function dips below the data there and the window must open
    downward.  ``PEAK`` is the mirror image (window opens upward).
    ``AMBIGUOUS``: the slope flips sign inside the interval while the outer
    slopes agree, so the window opens in both directions.
    """

    NONE = "none"
    DIP = "dip"
    PEAK = "peak"
    AMBIGUOUS = "ambiguous"

    @property
    def opens_down(self) -> bool:
        return self in (ExtremumFlag.DIP, ExtremumFlag.AMBIGUOUS)

    @property
    def opens_up(self) -> bool:
        return self in (ExtremumFlag.PEAK, ExtremumFlag.AMBIGUOUS)


@dataclass
class BoundLedger:
    """Admissibility state after the last accepted growth step.

    ``lambda_bar`` is the running product of scaled divided-difference
    ratios; ``b_minus``/``b_plus`` the window it must stay in.  An admissible
    state has ``b_minus < 0 < b_plus`` and ``b_minus <= lambda_bar <= b_plus``.
    """

    j: int
    lambda_bar: float
    b_minus: float
    b_plus: float
    m_l: float
    m_r: float

    @property
    def is_admissible(self) -> bool:
        return (
            self.b_minus < 0.0 < self.b_plus
            and self.b_minus <= self.lambda_bar <= self.b_plus
        )


@dataclass
class IntervalInterpolant:
    """Finished interpolant for one interval.

    Holds the stencil in insertion order, the matching Newton coefficients,
    the node abscissae (so evaluation needs no mesh lookups), and the final
    ledger when at least one growth step was accepted.
    """

    interval_index: int
    stencil: StencilNodes
    coefficients: list[float]
    nodes_x: list[float]
    degree: int
    ledger: BoundLedger | None = None

    def __call__(self, x):
        xq = np.asarray(x, dtype=float)
        acc = np.full(xq.shape, self.coefficients[-1])
        for k in range(len(self.coefficients) - 2, -1, -1):
            acc = acc * (xq - self.nodes_x[k]) + self.coefficients[k]
        if np.isscalar(x) or xq.ndim == 0:
            return float(acc)
        return acc


def detect_extremum(table: DividedDifferenceTable, i: int) -> ExtremumFlag:
    """Flag interval ``i`` when neighboring slopes suggest a hidden extremum.

    The test compares the slope entering the interval, the interval's own
    slope, and the slope leaving it.  At the domain boundaries the missing
    outer slope is assumed to match the interval's own, so edge intervals
    only flag when the two existing slopes disagree in sign.
    """
    slopes = table.rows[1]
    n_int = slopes.size
    if not 0 <= i < n_int:
        raise IndexError(f"interval {i} out of range")
    s_mid = slopes[i]
    s_prev = slopes[i - 1] if i > 0 else s_mid
    s_next = slopes[i + 1] if i + 1 < n_int else s_mid
    if s_prev * s_next < 0.0:
        return ExtremumFlag.DIP if s_prev < 0.0 else ExtremumFlag.PEAK
    if s_prev * s_mid < 0.0:
        return ExtremumFlag.AMBIGUOUS
    return ExtremumFlag.NONE


def interval_window(i, values, flag: ExtremumFlag, epsilon: float):
    """Confinement window ``(u_min, u_max)`` for interval ``i``.

    Margins default to ``epsilon`` times the endpoint magnitudes; a flagged
    extremum widens the corresponding side to the full magnitude, which for
    positive data drops ``u_min`` exactly to zero.
    """
    lo = min(values[i], values[i + 1])
    hi = max(values[i], values[i + 1])
    d_lo = abs(lo) if flag.opens_down else epsilon * abs(lo)
    d_hi = abs(hi) if flag.opens_up else epsilon * abs(hi)
    return float(lo - d_lo), float(hi + d_hi)


def compute_m_bounds(u_i, u_ip1, u_min, u_max, w=None, dbi=False):
    """Relaxation pair ``(m_l, m_r)`` mapping the window onto the unit scale.

    The pair rescales ``[u_min, u_max]`` by the interval's value jump so that
    ``m_l <= 0`` and ``m_r >= 1`` always hold; DBI mode pins them to (0, 1).
    When the endpoint values coincide the jump is replaced by the
    normalization constant ``w`` built from the first admissible three-point
    difference, and ``None`` is returned when that vanishes as well (the
    caller then falls back to a linear interpolant).
    """
    if dbi:
        return 0.0, 1.0
    denom = (u_ip1 - u_i) if w is None else w
    if denom == 0.0:
        if w is None:
            raise ValueError("equal endpoint values need the w normalization")
        return None
    a = (u_min - u_i) / denom
    b = (u_max - u_i) / denom
    if denom > 0.0:
        return min(0.0, a), max(1.0, b)
    return min(0.0, b), max(1.0, a)


def ppi_initial_bounds(m_l: float, m_r: float, d1: float) -> tuple[float, float]:
    """Window for the first growth step given the relaxation pair.

    Reduces to ``(-d1, d1)`` for the DBI pair (0, 1); larger ``m_r`` widens
    the negative side linearly and more negative ``m_l`` the positive side.
    """
    return (-4.0 * (m_r - 1.0) - 1.0) * d1, (-4.0 * m_l + 1.0) * d1


def advance_bounds(b_minus, b_plus, lambda_bar_prev, t, d):
    """Advance the admissibility window by one growth step.

    ``t`` is the normalized offset of the previously inserted node and ``d``
    the normalized width of the candidate stencil.  For ``t <= 0`` both sides
    shift by the running product and shrink by ``d / (1 - t)``; for ``t > 0``
    the scale factor ``d / (-t)`` is negative, so the pair swaps.
    Admissibility of the result is not implied and must be re-checked.
    """
    if t <= 0.0:
        f = d / (1.0 - t)
        return (b_minus - lambda_bar_prev) * f, (b_plus - lambda_bar_prev) * f
    f = d / (-t)
    return (b_plus - lambda_bar_prev) * f, (b_minus - lambda_bar_prev) * f


def _linear_interpolant(table, i):
    xs = table._points_list
    return IntervalInterpolant(
        interval_index=i,
        stencil=StencilNodes(i),
        coefficients=[table._rows_list[0][i], table._rows_list[1][i]],
        nodes_x=[xs[i], xs[i + 1]],
        degree=1,
        ledger=None,
    )


def build_interval_interpolant(table: DividedDifferenceTable, i: int, config: InterpConfig) -> IntervalInterpolant:
    """Grow the stencil for interval ``i`` and return its interpolant.

    Growth starts from the interval endpoints.  At each step both neighbor
    candidates are tested against the admissibility window; when both pass,
    the stencil is rebalanced around the interval's left endpoint (points
    strictly left of it versus points right of it, the interval's own right
    endpoint included), and exact balance falls back to the classic
    smallest-ratio-magnitude choice.  Growth halts when neither candidate is
    admissible, the mesh ends, or the stencil holds ``target_degree + 1``
    points.  Every interval yields at least the linear interpolant.
    """
    if config.method not in (DBI, PPI):
        raise ValueError("interval construction applies to the dbi/ppi methods only")
    mesh = table.mesh
    n = len(mesh)
    if not 0 <= i <= n - 2:
        raise IndexError(f"interval {i} out of range for mesh with {n} points")
    target = min(config.target_degree, n - 1)
    if table.max_order < target:
        raise ValueError(
            f"table holds orders up to {table.max_order}, need {target}"
        )

    xs = table._points_list
    rows = table._rows_list
    u_i = rows[0][i]
    u_ip1 = rows[0][i + 1]
    slope = rows[1][i]
    stencil = StencilNodes(i)
    coeffs = [u_i, slope]

    if target == 1:
        return _linear_interpolant(table, i)

    degenerate = slope == 0.0
    if config.method == DBI:
        if degenerate:
            # Equal endpoint values leave no room inside the data range for
            # anything but the constant.
            return _linear_interpolant(table, i)
        m_l, m_r = 0.0, 1.0
        u_min, u_max = min(u_i, u_ip1), max(u_i, u_ip1)
    else:
        flag = detect_extremum(table, i)
        u_min, u_max = interval_window(i, mesh.values, flag, config.epsilon)
        if degenerate:
            m_l = m_r = None  # fixed by the first accepted step
        else:
            m_l, m_r = compute_m_bounds(u_i, u_ip1, u_min, u_max)

    h = xs[i + 1] - xs[i]
    left, right = i, i + 1
    # The running ratio product lambda_bar_j equals the top divided difference
    # times the accumulated width product over the base normalization.
    # Tracking that scale (instead of chaining ratios of consecutive
    # differences) keeps lambda_bar well defined when an intermediate
    # difference vanishes, e.g. on data symmetric about a hidden extremum.
    lam_bar = 1.0
    scale = 0.0
    b_minus = b_plus = 0.0
    t_prev = 1.0
    j = 0

    while len(stencil) <= target:
        order = len(stencil)
        candidates = []
        for go_left in (True, False):
            if go_left:
                nl, nr = left - 1, right
                if nl < 0:
                    continue
            else:
                nl, nr = left, right + 1
                if nr > n - 1:
                    continue
            u_new = rows[order][nl]
            width = xs[nr] - xs[nl]
            d_next = width / h
            ml_c, mr_c = m_l, m_r
            if j == 0:
                if degenerate:
                    mm = compute_m_bounds(u_i, u_ip1, u_min, u_max, w=u_new * h * width)
                    if mm is None:
                        continue
                    ml_c, mr_c = mm
                    scale_cand = 1.0 / u_new
                    lam_cand = 1.0  # the normalization makes this exact
                else:
                    scale_cand = width / slope
                    lam_cand = u_new * scale_cand
                bm_c, bp_c = ppi_initial_bounds(ml_c, mr_c, d_next)
            else:
                scale_cand = scale * width
                lam_cand = u_new * scale_cand
                bm_c, bp_c = advance_bounds(b_minus, b_plus, lam_bar, t_prev, d_next)
            if bm_c < 0.0 < bp_c and bm_c <= lam_cand <= bp_c:
                candidates.append(
                    (go_left, nl, nr, u_new, lam_cand, scale_cand, bm_c, bp_c, ml_c, mr_c)
                )
        if not candidates:
            break
        if len(candidates) == 2:
            mu_l = i - left
            mu_r = right - i
            if mu_l < mu_r:
                chosen = candidates[0]
            elif mu_l > mu_r:
                chosen = candidates[1]
            elif abs(candidates[0][4]) >= abs(candidates[1][4]):
                chosen = candidates[1]
            else:
                chosen = candidates[0]
        else:
            chosen = candidates[0]
        go_left, nl, nr, u_new, lam_cand, scale_cand, bm_c, bp_c, ml_c, mr_c = chosen
        if go_left:
            stencil.grow_left()
            left = nl
        else:
            stencil.grow_right()
            right = nr
        coeffs.append(u_new)
        lam_bar, scale, b_minus, b_plus = lam_cand, scale_cand, bm_c, bp_c
        m_l, m_r = ml_c, mr_c
        t_prev = (xs[nl if go_left else nr] - xs[i]) / h
        j += 1

    ledger = None
    if j > 0:
        ledger = BoundLedger(
            j=j, lambda_bar=lam_bar, b_minus=b_minus, b_plus=b_plus, m_l=m_l, m_r=m_r
        )
    return IntervalInterpolant(
        interval_index=i,
        stencil=stencil,
        coefficients=coeffs,
        nodes_x=[xs[k] for k in stencil.indices],
        degree=len(stencil) - 1,
        ledger=ledger,
    )
