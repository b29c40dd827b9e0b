"""Graded 1-D grids for the stretched boundary-layer coordinate."""

from __future__ import annotations

import numpy as np

__all__ = ["graded_grid", "double_graded_grid"]


def graded_grid(length, d0=2e-3, d_max=0.5, growth=1.12):
    """Grid on [0, length], spacing d0 at 0 growing geometrically to d_max."""
    if length <= 0:
        raise ValueError("length must be positive")
    pts = [0.0]
    h = float(d0)
    while pts[-1] < length:
        pts.append(min(pts[-1] + h, length))
        h = min(h * growth, d_max)
    # merge a final sliver cell into its neighbor
    if len(pts) > 2 and pts[-1] - pts[-2] < 0.25 * (pts[-2] - pts[-3]):
        del pts[-2]
    return np.array(pts)


def double_graded_grid(length, d0=2e-3, d_max=0.5, growth=1.12):
    """Grid on [0, length] refined toward both endpoints."""
    half = graded_grid(0.5 * length, d0=d0, d_max=d_max, growth=growth)
    return np.concatenate([half[:-1], length - half[::-1]])
