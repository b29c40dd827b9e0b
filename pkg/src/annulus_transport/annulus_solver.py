"""Full transport solve on the annulus for rotationally invariant data.

For boundary data that depend on the direction angle only, the steady
transport equation

    eps * w . grad u + u - ubar = 0,        r_inner < |x| < r_outer,

reduces to two variables: the stretched outer-based coordinate
``eta = (r_outer - r) / eps`` and the angle ``phi`` between the direction
of flight and the local tangent frame.  In these variables the equation is
the canonical form

    sin(phi) du/deta - F(eta) cos(phi) du/dphi + u - ubar = 0,

with the exact geometric coefficient F(eta) = eps / (r_outer - eps*eta)
and no cutoff.  Inflow happens on sin(phi) > 0 at eta = 0 (the outer
circle) and on sin(phi) < 0 at eta = L = width/eps (the inner circle).
Backward characteristics are the straight chords of the annulus, seen in
(eta, phi); chords that miss the inner circle show up as trajectories that
turn at their point of closest approach and return to the outer boundary.

The same collision-kernel discretization as in
:mod:`annulus_transport.halfspace` applies verbatim, with inflow instead
of specular reflection at the top of the slab.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angular import AngularGrid, angular_grid
from .characteristics import trace_weights
from .geometry import Annulus, annulus_sweep_forcing
from .grids import double_graded_grid

__all__ = ["AnnulusSolution", "solve_annulus"]


@dataclass
class AnnulusSolution:
    """Converged transport solution on the annulus."""

    annulus: Annulus
    epsilon: float
    eta_grid: np.ndarray
    angles: AngularGrid
    ubar: np.ndarray  # angular mean on eta_grid
    u_grid: np.ndarray  # (n_eta, n_phi) nodal values
    forcing: object
    g_outer: object
    g_inner: object
    tau_max: float

    def _to_eta(self, r):
        return (self.annulus.r_outer - np.asarray(r, dtype=float)) / self.epsilon

    def mean_at(self, r):
        """Angular mean ubar(r), linear interpolation on the radial grid."""
        return np.interp(self._to_eta(r), self.eta_grid, self.ubar)

    def evaluate(self, r, phi):
        """Pointwise u(r, phi) by backward tracing against converged ubar."""
        r = np.asarray(r, dtype=float)
        phi = np.asarray(phi, dtype=float)
        shape = np.broadcast_shapes(r.shape, phi.shape)
        e = self._to_eta(np.broadcast_to(r, shape).ravel())
        p = np.broadcast_to(phi, shape).ravel()
        A, b = trace_weights(
            e,
            p,
            self.forcing,
            self.eta_grid,
            top="inflow",
            inflow_bottom=self.g_outer,
            inflow_top=self.g_inner,
            tau_max=self.tau_max,
        )
        return (A @ self.ubar + b).reshape(shape)


def solve_annulus(
    g_outer,
    g_inner,
    epsilon,
    annulus=Annulus(),
    *,
    n_phi=96,
    eta_grid=None,
    d0=2e-3,
    d_max=0.5,
    growth=1.12,
    grading=0.42,
    tau_max=40.0,
):
    """Solve the annulus transport problem; see module docstring.

    ``g_outer`` is the inflow datum at r = r_outer, used on sin(phi) > 0;
    ``g_inner`` the inflow datum at r = r_inner, used on sin(phi) < 0.
    Both are functions of ``phi`` in the global angle convention.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    slab_length = annulus.width / epsilon
    if eta_grid is None:
        eta_grid = double_graded_grid(slab_length, d0=d0, d_max=d_max, growth=growth)
    else:
        eta_grid = np.asarray(eta_grid, dtype=float)
    angles = angular_grid(n_phi, grading=grading)
    forcing = annulus_sweep_forcing(epsilon, annulus)

    ee, pp = np.meshgrid(eta_grid, angles.nodes, indexing="ij")
    A, b = trace_weights(
        ee.ravel(),
        pp.ravel(),
        forcing,
        eta_grid,
        top="inflow",
        inflow_bottom=g_outer,
        inflow_top=g_inner,
        tau_max=tau_max,
    )
    n_eta = eta_grid.size
    A = A.reshape(n_eta, angles.n, n_eta)
    b = b.reshape(n_eta, angles.n)

    w = angles.weights / (2.0 * np.pi)
    W = np.einsum("k,ikj->ij", w, A)
    c = b @ w
    ubar = np.linalg.solve(np.eye(n_eta) - W, c)
    u_grid = np.einsum("ikj,j->ik", A, ubar) + b

    return AnnulusSolution(
        annulus=annulus,
        epsilon=epsilon,
        eta_grid=eta_grid,
        angles=angles,
        ubar=ubar,
        u_grid=u_grid,
        forcing=forcing,
        g_outer=g_outer,
        g_inner=g_inner,
        tau_max=tau_max,
    )
