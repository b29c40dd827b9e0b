"""Steady transport on an annulus: layers, diffusion limit, grazing sets.

The package solves the one-speed steady transport equation with isotropic
scattering on a two-dimensional annulus in the small mean free path regime,
for rotationally invariant boundary data.  It provides

* a half-space (Milne-type) layer solver for the canonical equation
  sin(phi) df/deta - F(eta) cos(phi) df/dphi + f - fbar = S,
* a full annulus solver built on the same characteristic kernel,
* the classical and the curvature-corrected composite expansions, and
* a quantitative demonstration that the classical expansion fails by a
  fixed constant on the grazing set while the corrected one converges.
"""

from .angular import AngularGrid, angular_grid
from .annulus_solver import AnnulusSolution, solve_annulus
from .counterexample import expansion_errors, grazing_gap
from .expansion import CompositeExpansion, classical_expansion, geometric_expansion
from .geometry import (
    Annulus,
    GeometricForcing,
    Potential,
    annulus_sweep_forcing,
    flat_forcing,
    inner_layer_forcing,
    outer_layer_forcing,
    psi0_cutoff,
    psi_cutoff,
)
from .halfspace import HalfSpaceSolution, solve_half_space
from .interior import RadialHarmonic
from .verification import richardson_order

__all__ = [
    "AngularGrid",
    "angular_grid",
    "AnnulusSolution",
    "solve_annulus",
    "expansion_errors",
    "grazing_gap",
    "CompositeExpansion",
    "classical_expansion",
    "geometric_expansion",
    "Annulus",
    "GeometricForcing",
    "Potential",
    "annulus_sweep_forcing",
    "flat_forcing",
    "inner_layer_forcing",
    "outer_layer_forcing",
    "psi_cutoff",
    "psi0_cutoff",
    "HalfSpaceSolution",
    "solve_half_space",
    "RadialHarmonic",
    "richardson_order",
]

__version__ = "0.1.0"
