"""Backward characteristic tracing for the canonical half-space equation.

The canonical problem on a slab ``eta in [0, L]`` is

    sin(phi) df/deta - F(eta) cos(phi) df/dphi + f - fbar = S(eta, phi)

with inflow data ``h0(phi)`` at eta=0 for sin(phi) > 0 and either specular
reflection (phi -> -phi) or inflow data ``hL(phi)`` for sin(phi) < 0 at
eta = L.  Along a characteristic parametrized by s with

    deta/ds = sin(phi),    dphi/ds = -F(eta) cos(phi),

the equation collapses to df/ds + f = fbar + S, so s is exactly the optical
depth and the solution at a point is an exponentially attenuated integral
of ``fbar + S`` over the backward trajectory plus the attenuated boundary
datum where the trajectory leaves the slab.

:func:`trace_weights` performs this backward integration for a batch of
starting points at once and *linearizes* it in ``fbar``: it returns a
matrix ``A`` of collision weights on a fixed eta-grid (piecewise-linear
representation of fbar) and a vector ``b`` collecting boundary-data and
explicit-source contributions, so that ``f(points) = A @ fbar + b``.
Every trajectory is truncated once its accumulated optical depth exceeds
``tau_max``; the residual weight exp(-tau_max) is deposited on fbar at the
current position, which keeps each row of ``[A | boundary]`` an exact
partition of unity (constant data is reproduced to machine precision).
"""

from __future__ import annotations

import numpy as np

__all__ = ["trace_weights"]


def _rk4_step(eta, phi, ds, forcing):
    """One backward RK4 step of (deta, dphi)/dsigma = (-sin phi, F cos phi)."""

    def rhs(e, p):
        return -np.sin(p), forcing(e) * np.cos(p)

    k1e, k1p = rhs(eta, phi)
    k2e, k2p = rhs(eta + 0.5 * ds * k1e, phi + 0.5 * ds * k1p)
    k3e, k3p = rhs(eta + 0.5 * ds * k2e, phi + 0.5 * ds * k2p)
    k4e, k4p = rhs(eta + ds * k3e, phi + ds * k3p)
    new_eta = eta + (ds / 6.0) * (k1e + 2.0 * k2e + 2.0 * k3e + k4e)
    new_phi = phi + (ds / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
    return new_eta, new_phi


def _deposit(matrix, rows, eta_grid, eta, weight):
    """Scatter ``weight`` onto the piecewise-linear hat functions at ``eta``."""
    idx = np.searchsorted(eta_grid, eta)
    idx = np.clip(idx, 1, eta_grid.size - 1)
    left = eta_grid[idx - 1]
    right = eta_grid[idx]
    frac = np.clip((eta - left) / (right - left), 0.0, 1.0)
    np.add.at(matrix, (rows, idx - 1), weight * (1.0 - frac))
    np.add.at(matrix, (rows, idx), weight * frac)


def trace_weights(
    eta_start,
    phi_start,
    forcing,
    eta_grid,
    *,
    top="specular",
    inflow_bottom=None,
    inflow_top=None,
    source=None,
    tau_max=40.0,
    ds_max=0.25,
    ds_min=1e-4,
    step_factor=0.5,
):
    """Backward-trace a batch of points; return collision weights and data term.

    Parameters
    ----------
    eta_start, phi_start : array_like, shape (N,)
        Starting points of the backward trajectories.
    forcing : callable
        F(eta), vectorized over numpy arrays.
    eta_grid : ndarray, shape (M,)
        Strictly increasing, eta_grid[0] == 0; eta_grid[-1] is the slab
        length L.  fbar is represented by its values on this grid.
    top : {"specular", "inflow"}
        Condition at eta = L.
    inflow_bottom : callable or None
        h0(phi), evaluated wherever a trajectory exits through eta=0.
        ``None`` means zero inflow.
    inflow_top : callable or None
        hL(phi) for top == "inflow".
    source : callable or None
        S(eta, phi) explicit source, accumulated into ``b``.
    tau_max : float
        Optical-depth truncation of trajectories.
    ds_max, ds_min, step_factor : float
        Step-size control; the local step is
        clip(step_factor * spacing(eta) / (|sin phi| + 0.05), ds_min, ds_max)
        so trajectories never jump across many fbar cells.

    Returns
    -------
    A : ndarray, shape (N, M)
        f(start) = A @ fbar + b.
    b : ndarray, shape (N,)
    """
    eta_grid = np.asarray(eta_grid, dtype=float)
    if eta_grid.ndim != 1 or eta_grid.size < 2:
        raise ValueError("eta_grid must be a 1-D array with >= 2 nodes")
    if eta_grid[0] != 0.0 or np.any(np.diff(eta_grid) <= 0.0):
        raise ValueError("eta_grid must start at 0 and increase strictly")
    if top not in ("specular", "inflow"):
        raise ValueError(f"unknown top condition {top!r}")
    if top == "inflow" and inflow_top is None:
        raise ValueError("top='inflow' requires inflow_top")

    slab_length = eta_grid[-1]
    spacings = np.diff(eta_grid)

    eta = np.array(eta_start, dtype=float).ravel().copy()
    phi = np.array(phi_start, dtype=float).ravel().copy()
    n_pts = eta.size
    if np.any(eta < -1e-12) or np.any(eta > slab_length + 1e-12):
        raise ValueError("starting points must lie inside [0, L]")
    eta = np.clip(eta, 0.0, slab_length)

    A = np.zeros((n_pts, eta_grid.size))
    b = np.zeros(n_pts)
    tau = np.zeros(n_pts)
    alive = np.arange(n_pts)

    def local_spacing(e):
        cell = np.clip(np.searchsorted(eta_grid, e) - 1, 0, spacings.size - 1)
        return spacings[cell]

    while alive.size:
        e = eta[alive]
        p = phi[alive]
        ds = np.clip(
            step_factor * local_spacing(e) / (np.abs(np.sin(p)) + 0.05),
            ds_min,
            ds_max,
        )
        ds = np.minimum(ds, tau_max - tau[alive] + 1e-12)

        e1, p1 = _rk4_step(e, p, ds, forcing)

        # Shorten steps that cross eta=0 or eta=L so they land on the
        # boundary (linear fraction, then one corrective re-step).
        hit_bottom = e1 < 0.0
        hit_top = e1 > slab_length
        crossing = hit_bottom | hit_top
        if np.any(crossing):
            target = np.where(hit_bottom, 0.0, slab_length)
            denom = e - e1
            safe = np.where(np.abs(denom) > 1e-300, denom, 1.0)
            frac = np.clip((e - target) / safe, 0.0, 1.0)
            ds_c = ds * frac
            e1_c, p1_c = _rk4_step(e, p, ds_c, forcing)
            e1 = np.where(crossing, np.where(hit_bottom, 0.0, slab_length), e1)
            p1 = np.where(crossing, p1_c, p1)
            ds = np.where(crossing, ds_c, ds)
            del e1_c

        # Collision deposit over the segment at its midpoint.
        seg_weight = np.exp(-tau[alive]) * (-np.expm1(-ds))
        e_mid = 0.5 * (e + e1)
        _deposit(A, alive, eta_grid, e_mid, seg_weight)
        if source is not None:
            b[alive] += seg_weight * source(e_mid, 0.5 * (p + p1))

        tau[alive] += ds
        eta[alive] = e1
        phi[alive] = p1

        att = np.exp(-tau[alive])

        done = np.zeros(alive.size, dtype=bool)

        if np.any(hit_bottom):
            rows = alive[hit_bottom]
            if inflow_bottom is not None:
                b[rows] += att[hit_bottom] * inflow_bottom(phi[rows])
            done |= hit_bottom

        if np.any(hit_top):
            rows = alive[hit_top]
            if top == "inflow":
                b[rows] += att[hit_top] * inflow_top(phi[rows])
                done |= hit_top
            else:
                phi[rows] = -phi[rows]

        truncated = (tau[alive] >= tau_max - 1e-9) & ~done
        if np.any(truncated):
            rows = alive[truncated]
            _deposit(A, rows, eta_grid, eta[rows], att[truncated])
            done |= truncated

        alive = alive[~done]

    return A, b
