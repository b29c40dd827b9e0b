"""Zeroth-order composite expansions: interior profile plus boundary layers.

Two variants of the same construction:

* the *classical* expansion attaches flat half-space (Milne) layers to the
  two boundary circles, ignoring their curvature;
* the *geometric* expansion attaches half-space layers whose equation keeps
  the curvature term of the circle they hug (forcings from
  :mod:`annulus_transport.geometry`).

In both cases the recipe is identical.  Each layer problem is solved with
the full boundary datum; its far-field constant supplies the boundary value
of the radial harmonic interior profile, and the layer correction is the
decaying part of the layer solution, localized by the narrow cutoff
``psi0`` so the two layers never overlap:

    approx(r, phi) = ubar0(r)
                   + psi0(r_outer - r) * (f_out(eta_out, phi) - c_out)
                   + psi0(r - r_inner) * (f_in(eta_in, -phi) - c_in)

with eta_out = (r_outer - r)/eps and eta_in = (r - r_inner)/eps.  The inner
layer lives in the flipped angle variable: reducing the transport equation
at a concave boundary to the canonical half-space form with inflow on
sin > 0 requires chi = -phi, so the layer is solved with datum
h(chi) = g_inner(-chi) and queried at chi = -phi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import (
    Annulus,
    flat_forcing,
    inner_layer_forcing,
    outer_layer_forcing,
    psi0_cutoff,
)
from .halfspace import HalfSpaceSolution, solve_half_space
from .interior import RadialHarmonic

__all__ = ["CompositeExpansion", "classical_expansion", "geometric_expansion"]


@dataclass
class CompositeExpansion:
    """Interior profile plus cutoff boundary-layer corrections."""

    annulus: Annulus
    epsilon: float
    interior: RadialHarmonic
    inner_layer: HalfSpaceSolution  # posed in the flipped angle chi = -phi
    outer_layer: HalfSpaceSolution

    def __call__(self, r, phi):
        r = np.asarray(r, dtype=float)
        phi = np.asarray(phi, dtype=float)
        shape = np.broadcast_shapes(r.shape, phi.shape)
        r = np.broadcast_to(r, shape).ravel().copy()
        phi = np.broadcast_to(phi, shape).ravel()

        width = self.annulus.width
        mu_out = self.annulus.r_outer - r
        mu_in = r - self.annulus.r_inner
        out = np.asarray(self.interior(r), dtype=float)

        w_out = psi0_cutoff(mu_out, width)
        mask = w_out > 0.0
        if np.any(mask):
            layer = self.outer_layer.evaluate(mu_out[mask] / self.epsilon, phi[mask])
            out[mask] += w_out[mask] * (layer - self.outer_layer.f_infinity)

        w_in = psi0_cutoff(mu_in, width)
        mask = w_in > 0.0
        if np.any(mask):
            layer = self.inner_layer.evaluate(mu_in[mask] / self.epsilon, -phi[mask])
            out[mask] += w_in[mask] * (layer - self.inner_layer.f_infinity)

        return out.reshape(shape)


def _build(g_outer, g_inner, epsilon, annulus, forcing_in, forcing_out, solver_kwargs):
    # slab long enough for both the psi0 support and the layer forcing support
    slab = 0.75 * annulus.width / epsilon + 15.0
    kwargs = dict(slab_length=slab)
    kwargs.update(solver_kwargs)
    inner = solve_half_space(lambda chi: g_inner(-chi), forcing_in, **kwargs)
    outer = solve_half_space(g_outer, forcing_out, **kwargs)
    interior = RadialHarmonic(annulus, inner.f_infinity, outer.f_infinity)
    return CompositeExpansion(
        annulus=annulus,
        epsilon=epsilon,
        interior=interior,
        inner_layer=inner,
        outer_layer=outer,
    )


def classical_expansion(g_outer, g_inner, epsilon, annulus=Annulus(), **solver_kwargs):
    """Composite expansion with flat (curvature-blind) boundary layers."""
    return _build(
        g_outer, g_inner, epsilon, annulus, flat_forcing, flat_forcing, solver_kwargs
    )


def geometric_expansion(g_outer, g_inner, epsilon, annulus=Annulus(), **solver_kwargs):
    """Composite expansion with curvature-corrected boundary layers."""
    return _build(
        g_outer,
        g_inner,
        epsilon,
        annulus,
        inner_layer_forcing(epsilon, annulus),
        outer_layer_forcing(epsilon, annulus),
        solver_kwargs,
    )
