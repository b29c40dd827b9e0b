"""Annulus geometry, layer cutoff functions, and geometric forcing terms.

Conventions
-----------
The annulus is ``r_inner < |x| < r_outer``.  Boundary-layer problems are
posed in a stretched normal coordinate ``eta`` measuring distance from a
circle in units of the mean free path ``epsilon``:

* outer layer:  ``eta = (r_outer - r) / epsilon``
* inner layer:  ``eta = (r - r_inner) / epsilon``

All half-space problems are reduced to the single canonical form

    sin(phi) df/deta - F(eta) cos(phi) df/dphi + f - fbar = S

on ``eta >= 0``, ``phi in [-pi, pi)``, with inflow data on ``sin(phi) > 0``.
The forcing ``F`` encodes the curvature of the circle the layer is attached
to; ``F = 0`` recovers the flat half-space problem.  For the inner (concave)
circle the reduction flips the sign of the angular variable, which is
handled by the expansion assembly, not here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Annulus",
    "smooth_plateau",
    "psi_cutoff",
    "psi0_cutoff",
    "GeometricForcing",
    "flat_forcing",
    "outer_layer_forcing",
    "inner_layer_forcing",
    "annulus_sweep_forcing",
    "Potential",
]


@dataclass(frozen=True)
class Annulus:
    """Annular domain ``r_inner < |x| < r_outer``."""

    r_inner: float = 1.0
    r_outer: float = 2.0

    def __post_init__(self):
        if not 0.0 < self.r_inner < self.r_outer:
            raise ValueError(
                f"need 0 < r_inner < r_outer, got {self.r_inner}, {self.r_outer}"
            )

    @property
    def width(self) -> float:
        return self.r_outer - self.r_inner

    def contains(self, r) -> np.ndarray:
        r = np.asarray(r)
        return (r > self.r_inner) & (r < self.r_outer)


def smooth_plateau(x):
    """C^1 monotone ramp: 1 for x <= 0, 0 for x >= 1, cubic in between."""
    x = np.asarray(x, dtype=float)
    t = np.clip(x, 0.0, 1.0)
    return 1.0 - t * t * (3.0 - 2.0 * t)


def psi_cutoff(mu, width):
    """Outer cutoff: 1 on [0, width/2], 0 beyond 3*width/4.

    ``mu`` is the physical (unstretched) distance to the boundary circle.
    """
    lo = 0.5 * width
    hi = 0.75 * width
    return smooth_plateau((np.asarray(mu, dtype=float) - lo) / (hi - lo))


def psi0_cutoff(mu, width):
    """Inner cutoff: 1 on [0, width/4], 0 beyond 3*width/8.

    Its support is strictly inside the plateau of :func:`psi_cutoff`, so the
    product ``psi0 * psi`` equals ``psi0``.
    """
    lo = 0.25 * width
    hi = 0.375 * width
    return smooth_plateau((np.asarray(mu, dtype=float) - lo) / (hi - lo))


@dataclass(frozen=True)
class GeometricForcing:
    """Forcing F(eta) = sign * epsilon * cutoff(epsilon*eta) / (radius - sign*epsilon*eta).

    ``sign = -1`` gives the concave (inner-circle) forcing with denominator
    ``radius + epsilon*eta`` and F < 0; ``sign = +1`` gives the convex
    (outer-circle) forcing with denominator ``radius - epsilon*eta`` and
    F > 0.  With ``cutoff_width=None`` the cutoff is identically 1, which is
    the exact geometric coefficient used for full-annulus sweeps.
    """

    epsilon: float
    radius: float
    sign: int
    cutoff_width: float | None = None

    def __call__(self, eta):
        eta = np.asarray(eta, dtype=float)
        mu = self.epsilon * eta
        denom = self.radius - self.sign * mu
        f = self.sign * self.epsilon / denom
        if self.cutoff_width is not None:
            f = f * psi_cutoff(mu, self.cutoff_width)
        return f


def flat_forcing(eta):
    """Zero forcing of the flat half-space problem."""
    return np.zeros_like(np.asarray(eta, dtype=float))


def inner_layer_forcing(epsilon: float, annulus: Annulus) -> GeometricForcing:
    """Forcing of the inner-circle layer, F(eta) = -eps*psi/(r_inner + eps*eta)."""
    return GeometricForcing(epsilon, annulus.r_inner, -1, cutoff_width=annulus.width)


def outer_layer_forcing(epsilon: float, annulus: Annulus) -> GeometricForcing:
    """Forcing of the outer-circle layer, F(eta) = +eps*psi/(r_outer - eps*eta)."""
    return GeometricForcing(epsilon, annulus.r_outer, +1, cutoff_width=annulus.width)


def annulus_sweep_forcing(epsilon: float, annulus: Annulus) -> GeometricForcing:
    """Exact geometric coefficient of the full annulus equation.

    In the outer-based stretched coordinate ``eta = (r_outer - r)/epsilon``
    the rotationally invariant transport equation reads

        sin(phi) du/deta - F(eta) cos(phi) du/dphi + u - ubar = 0

    with F(eta) = epsilon / (r_outer - epsilon*eta), no cutoff.
    """
    return GeometricForcing(epsilon, annulus.r_outer, +1, cutoff_width=None)


class Potential:
    """Antiderivative V(eta) of -F with V(0) = 0.

    Along characteristics of the canonical half-space equation the energy
    ``E = cos(phi) * exp(V(eta))`` is conserved.  V is tabulated once on a
    dense grid and interpolated.
    """

    def __init__(self, forcing, eta_max: float, n: int = 20001):
        self._eta = np.linspace(0.0, float(eta_max), n)
        minus_f = -np.asarray(forcing(self._eta), dtype=float)
        dv = 0.5 * (minus_f[1:] + minus_f[:-1]) * np.diff(self._eta)
        self._v = np.concatenate([[0.0], np.cumsum(dv)])

    def __call__(self, eta):
        return np.interp(np.asarray(eta, dtype=float), self._eta, self._v)

    def energy(self, eta, phi):
        """Conserved characteristic energy cos(phi) * exp(V(eta))."""
        return np.cos(np.asarray(phi, dtype=float)) * np.exp(self(eta))
