"""Shared oracles and randomized invariant checks for the test suite.

The stencil oracle here deliberately avoids the library's incremental
bookkeeping: divided differences come from a memoized recursion, the ratio
products are recomputed from their closed form at every step, and the
admissibility window is replayed from its base case for each candidate.
Agreement between the two is therefore a meaningful cross-check, not a
tautology.
"""

from __future__ import annotations

import numpy as np

import ppinterp as pp
from ppinterp.selection import build_interval_interpolant


def lagrange_eval(nodes_x, nodes_u, xs):
    """Direct Lagrange-form evaluation over the given nodes."""
    xs = np.asarray(xs, dtype=float)
    total = np.zeros_like(xs)
    for k, (xk, uk) in enumerate(zip(nodes_x, nodes_u)):
        basis = np.ones_like(xs)
        for m, xm in enumerate(nodes_x):
            if m != k:
                basis *= (xs - xm) / (xk - xm)
        total += uk * basis
    return total


def naive_dd(x, u):
    """Memoized recursive divided differences: dd(a, b) over x[a..b]."""
    memo = {}

    def rec(a, b):
        key = (a, b)
        if key not in memo:
            if a == b:
                memo[key] = float(u[a])
            else:
                memo[key] = (rec(a + 1, b) - rec(a, b - 1)) / (x[b] - x[a])
        return memo[key]

    return rec


def _oracle_m(u_ref, denom, u_min, u_max):
    a = (u_min - u_ref) / denom
    b = (u_max - u_ref) / denom
    if denom > 0:
        return min(0.0, a), max(1.0, b)
    return min(0.0, b), max(1.0, a)


def oracle_build_stencil(x, u, i, method, degree, epsilon):
    """Reference stencil construction for one interval.

    Returns the insertion-ordered node index list the greedy algorithm should
    produce.  Every admissibility test recomputes the ratio product from its
    closed form and the window from the base case over the full candidate
    history.
    """
    x = [float(v) for v in x]
    u = [float(v) for v in u]
    n = len(x)
    dd = naive_dd(x, u)
    h = x[i + 1] - x[i]
    target = min(degree, n - 1)
    ins = [i, i + 1]
    if target == 1:
        return ins

    n_int = n - 1
    s_mid = dd(i, i + 1)
    s_prev = dd(i - 1, i) if i > 0 else s_mid
    s_next = dd(i + 1, i + 2) if i + 1 < n_int else s_mid
    opens_down = opens_up = False
    if s_prev * s_next < 0:
        if s_prev < 0:
            opens_down = True
        else:
            opens_up = True
    elif s_prev * s_mid < 0:
        opens_down = opens_up = True
    lo, hi = min(u[i], u[i + 1]), max(u[i], u[i + 1])
    u_min = lo - (abs(lo) if opens_down else epsilon * abs(lo))
    u_max = hi + (abs(hi) if opens_up else epsilon * abs(hi))

    flat = u[i] == u[i + 1]
    denom = None
    m_pair = None
    if method == "dbi":
        if flat:
            return ins
        m_pair = (0.0, 1.0)
        denom = dd(i, i + 1)
    elif not flat:
        m_pair = _oracle_m(u[i], u[i + 1] - u[i], u_min, u_max)
        denom = dd(i, i + 1)

    def ratio_products(cand, den):
        seq = []
        prod = 1.0
        for k in range(1, len(cand) - 1):
            pre = cand[: k + 2]
            a, b = min(pre), max(pre)
            prod *= x[b] - x[a]
            if flat and k == 1:
                # w is built from this very difference, so the first ratio
                # product is exactly one by construction.
                seq.append(1.0)
            else:
                seq.append(dd(a, b) * prod / den)
        return seq

    def final_window(cand, m_l, m_r, seq):
        pre = cand[:3]
        d1 = (x[max(pre)] - x[min(pre)]) / h
        bm = (-4.0 * (m_r - 1.0) - 1.0) * d1
        bp = (-4.0 * m_l + 1.0) * d1
        for k in range(2, len(cand) - 1):
            pre = cand[: k + 2]
            dk = (x[max(pre)] - x[min(pre)]) / h
            tk = (x[cand[k]] - x[i]) / h
            lam_prev = seq[k - 2]
            if tk <= 0:
                f = dk / (1.0 - tk)
                bm, bp = (bm - lam_prev) * f, (bp - lam_prev) * f
            else:
                f = dk / (-tk)
                bm, bp = (bp - lam_prev) * f, (bm - lam_prev) * f
        return bm, bp

    left, right = i, i + 1
    while len(ins) < target + 1:
        options = []
        for side in ("L", "R"):
            if side == "L":
                if left - 1 < 0:
                    continue
                cand = ins + [left - 1]
                nl, nr = left - 1, right
            else:
                if right + 1 > n - 1:
                    continue
                cand = ins + [right + 1]
                nl, nr = left, right + 1
            den, mp = denom, m_pair
            if len(ins) == 2 and flat:
                w = dd(nl, nr) * h * (x[nr] - x[nl])
                if w == 0.0:
                    continue
                mp = _oracle_m(u[i], w, u_min, u_max)
                den = w / h
            seq = ratio_products(cand, den)
            bm, bp = final_window(cand, mp[0], mp[1], seq)
            lam = seq[-1]
            if bm < 0.0 < bp and bm <= lam <= bp:
                options.append((side, lam, cand, den, mp))
        if not options:
            break
        if len(options) == 2:
            mu_l = i - left
            mu_r = right - i
            if mu_l < mu_r:
                pick = options[0]
            elif mu_l > mu_r:
                pick = options[1]
            elif abs(options[0][1]) >= abs(options[1][1]):
                pick = options[1]
            else:
                pick = options[0]
        else:
            pick = options[0]
        side, _, ins, denom, m_pair = pick
        if side == "L":
            left -= 1
        else:
            right += 1
    return ins


def random_mesh(rng, n_min=2, n_max=12, nonnegative=False, monotone=False):
    """Nonuniform random mesh with random-scale data."""
    n = int(rng.integers(n_min, n_max + 1))
    gaps = rng.uniform(0.05, 1.0, n - 1) * rng.uniform(0.2, 5.0)
    pts = np.concatenate(([0.0], np.cumsum(gaps))) + rng.uniform(-3.0, 3.0)
    scale = rng.uniform(0.1, 10.0)
    if monotone:
        steps = rng.uniform(0.1, 2.0, n - 1) * scale
        vals = np.concatenate(([0.0], np.cumsum(steps))) + rng.normal(0, scale)
        if rng.random() < 0.5:
            vals = vals[::-1].copy()
    elif nonnegative:
        vals = np.abs(rng.normal(0.0, scale, n))
    else:
        vals = rng.normal(0.0, scale, n)
    return pp.Mesh1D(pts, vals)


def random_insertion_order(rng, n, i, size):
    """A valid insertion sequence of ``size`` nodes starting from (i, i+1)."""
    ins = [i, i + 1]
    left, right = i, i + 1
    while len(ins) < size:
        can_left = left - 1 >= 0
        can_right = right + 1 <= n - 1
        if can_left and (not can_right or rng.random() < 0.5):
            left -= 1
            ins.append(left)
        else:
            right += 1
            ins.append(right)
    return ins


# ---------------------------------------------------------------------------
# Randomized invariant sweeps (shared between the property tests and the
# acceptance suite).


def check_range_invariants(n_meshes=1000, samples=1000, seed=20240817):
    """Range guarantees plus the degree floor and ledger consistency.

    For DBI every sampled value must stay inside the interval's data range;
    for PPI inside the interval's confinement window.  Tolerance is
    1e-12 times the data scale.
    """
    rng = np.random.default_rng(seed)
    for _ in range(n_meshes):
        mesh = random_mesh(rng)
        table = pp.build_table(mesh)
        d = int(rng.integers(1, 9))
        scale = max(1.0, float(np.max(np.abs(mesh.values))))
        tol = 1e-12 * scale
        for method in (pp.DBI, pp.PPI):
            cfg = pp.InterpConfig(method=method, target_degree=d, epsilon=0.01)
            for i in range(mesh.n_intervals):
                piece = build_interval_interpolant(table, i, cfg)
                assert piece.degree >= 1
                if piece.ledger is not None:
                    led = piece.ledger
                    assert led.b_minus < 0.0 < led.b_plus
                    assert led.b_minus <= led.lambda_bar <= led.b_plus
                xs = np.linspace(mesh.points[i], mesh.points[i + 1], samples)
                vals = piece(xs)
                if method == pp.DBI:
                    lo = min(mesh.values[i], mesh.values[i + 1])
                    hi = max(mesh.values[i], mesh.values[i + 1])
                else:
                    flag = pp.detect_extremum(table, i)
                    lo, hi = pp.interval_window(i, mesh.values, flag, cfg.epsilon)
                assert vals.min() >= lo - tol, (
                    f"{method} below window: {vals.min()} < {lo} (interval {i})"
                )
                assert vals.max() <= hi + tol, (
                    f"{method} above window: {vals.max()} > {hi} (interval {i})"
                )


def check_positivity(n_meshes=1000, samples=1000, seed=777):
    """PPI keeps nonnegative data nonnegative (within 1e-12 of the scale)."""
    rng = np.random.default_rng(seed)
    for _ in range(n_meshes):
        mesh = random_mesh(rng, nonnegative=True)
        table = pp.build_table(mesh)
        cfg = pp.InterpConfig(method=pp.PPI, target_degree=int(rng.integers(1, 9)), epsilon=0.01)
        scale = max(1.0, float(np.max(np.abs(mesh.values))))
        for i in range(mesh.n_intervals):
            piece = build_interval_interpolant(table, i, cfg)
            xs = np.linspace(mesh.points[i], mesh.points[i + 1], samples)
            low = piece(xs).min()
            assert low >= -1e-12 * scale, f"negative value {low} in interval {i}"


def check_ppi_reduces_to_dbi(n_meshes=1000, seed=4242):
    """With zero relaxation on monotone data PPI must coincide with DBI."""
    rng = np.random.default_rng(seed)
    for _ in range(n_meshes):
        mesh = random_mesh(rng, n_min=3, monotone=True)
        table = pp.build_table(mesh)
        d = int(rng.integers(1, 9))
        dbi = pp.InterpConfig(method=pp.DBI, target_degree=d)
        ppi = pp.InterpConfig(method=pp.PPI, target_degree=d, epsilon=0.0)
        scale = max(1.0, float(np.max(np.abs(mesh.values))))
        for i in range(mesh.n_intervals):
            assert pp.detect_extremum(table, i) is pp.ExtremumFlag.NONE
            a = build_interval_interpolant(table, i, dbi)
            b = build_interval_interpolant(table, i, ppi)
            assert a.stencil.indices == b.stencil.indices
            xs = np.linspace(mesh.points[i], mesh.points[i + 1], 101)
            assert np.max(np.abs(a(xs) - b(xs))) <= 1e-14 * scale


def check_against_oracle(n_trials=1000, seed=99):
    """Greedy construction matches the from-definitions oracle on tiny meshes."""
    rng = np.random.default_rng(seed)
    for trial in range(n_trials):
        mesh = random_mesh(rng, n_min=2, n_max=6)
        vals = mesh.values.copy()
        # Exercise the equal-endpoint paths: duplicate a value sometimes,
        # flatten everything occasionally.
        r = rng.random()
        if r < 0.25:
            k = int(rng.integers(0, len(vals) - 1))
            vals[k + 1] = vals[k]
        elif r < 0.32:
            vals[:] = vals[0]
        mesh = pp.Mesh1D(mesh.points, vals)
        table = pp.build_table(mesh)
        d = int(rng.integers(1, 6))
        eps = float(rng.choice([0.0, 0.01, 0.1, 1.0]))
        for method in (pp.DBI, pp.PPI):
            cfg = pp.InterpConfig(method=method, target_degree=d, epsilon=eps)
            for i in range(mesh.n_intervals):
                got = build_interval_interpolant(table, i, cfg).stencil.indices
                want = oracle_build_stencil(
                    mesh.points, mesh.values, i, method, d, eps
                )
                assert got == want, (
                    f"trial {trial}: interval {i} {method} d={d} eps={eps}: "
                    f"{got} != oracle {want}"
                )


def check_newton_matches_lagrange(n_trials=200, n_points=100, seed=31415):
    """Newton-form evaluation agrees with the Lagrange form to 1e-12 relative."""
    rng = np.random.default_rng(seed)
    for _ in range(n_trials):
        mesh = random_mesh(rng, n_min=5, n_max=10)
        table = pp.build_table(mesh)
        n = len(mesh)
        i = int(rng.integers(0, n - 1))
        order = random_insertion_order(rng, n, i, min(5, n))
        stencil = pp.StencilNodes(i)
        for idx in order[2:]:
            if idx < stencil.left:
                stencil.grow_left()
            else:
                stencil.grow_right()
        span_lo = mesh.points[min(order)]
        span_hi = mesh.points[max(order)]
        xs = rng.uniform(span_lo, span_hi, n_points)
        got = pp.newton_eval(stencil, table, xs)
        want = lagrange_eval(
            mesh.points[order], mesh.values[order], xs
        )
        denom = np.maximum(1.0, np.abs(want))
        assert np.max(np.abs(got - want) / denom) <= 1e-12
