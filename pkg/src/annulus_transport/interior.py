"""Leading-order interior solution of the diffusion limit.

Away from the boundary layers the angular mean of the transport solution
converges, as the mean free path vanishes, to a harmonic function on the
annulus.  For rotationally invariant boundary data (the only case the
package targets, and the one the grazing-set counterexample lives in) the
harmonic interior profile is radial,

    ubar0(r) = A + B * log(r),

fixed by its values on the two boundary circles.  Those values are in turn
the far-field constants of the corresponding half-space layer problems.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Annulus

__all__ = ["RadialHarmonic"]


@dataclass(frozen=True)
class RadialHarmonic:
    """Radial harmonic function A + B log(r) on an annulus.

    Parameters
    ----------
    annulus : Annulus
    inner_value, outer_value : float
        Prescribed values at r_inner and r_outer.
    """

    annulus: Annulus
    inner_value: float
    outer_value: float

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        t = np.log(r / self.annulus.r_inner) / np.log(
            self.annulus.r_outer / self.annulus.r_inner
        )
        return self.inner_value + (self.outer_value - self.inner_value) * t
