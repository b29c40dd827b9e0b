"""Convergence-order estimation from successively refined solves."""

from __future__ import annotations

import numpy as np

__all__ = ["richardson_order"]


def richardson_order(values, refinement=2.0):
    """Observed convergence orders from values at geometrically refined meshes.

    ``values[k]`` is a scalar observable computed with mesh parameter
    ``h / refinement**k``.  Returns the array of orders

        p_k = log(|v_k - v_{k+1}| / |v_{k+1} - v_{k+2}|) / log(refinement),

    one per consecutive triple.  Needs at least three values.
    """
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        raise ValueError("need at least three values")
    d = np.abs(np.diff(v))
    if np.any(d == 0.0):
        raise ValueError("consecutive values coincide; observable already converged")
    return np.log(d[:-1] / d[1:]) / np.log(refinement)
