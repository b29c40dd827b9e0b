"""Angular grids and quadrature on the velocity circle.

Velocity directions are parametrized by the angle ``phi`` in [-pi, pi).
Angular means are plain averages, ``fbar = (1/2pi) * integral f dphi``.
Solutions of half-space transport problems are smooth in ``phi`` except
near the grazing directions ``sin(phi) = 0`` (phi = 0 and phi = +-pi), so
the default grid clusters nodes there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["AngularGrid", "angular_grid"]


@dataclass(frozen=True)
class AngularGrid:
    """Midpoint quadrature nodes/weights on [-pi, pi)."""

    nodes: np.ndarray
    weights: np.ndarray  # sums to 2*pi

    @property
    def n(self) -> int:
        return self.nodes.size

    def mean(self, values: np.ndarray, axis: int = -1) -> np.ndarray:
        """Angular average (1/2pi) * sum w_j f_j along ``axis``."""
        values = np.asarray(values)
        w = self.weights
        shape = [1] * values.ndim
        shape[axis] = w.size
        return np.sum(values * w.reshape(shape), axis=axis) / (2.0 * np.pi)


def angular_grid(n: int, grading: float = 0.42) -> AngularGrid:
    """Midpoint grid on [-pi, pi) graded toward the grazing set.

    Cell edges are phi(t) = pi*t - grading*sin(2*pi*t) for uniform t in
    [-1, 1]; the Jacobian pi*(1 - 2*grading*cos(2*pi*t)) is smallest at
    t in {-1, 0, 1}, i.e. at phi in {-pi, 0, pi}.  ``grading`` must lie in
    [0, 0.5); 0 gives the uniform grid.

    ``n`` should be even so no node lands exactly on sin(phi) = 0.
    """
    if n < 4:
        raise ValueError("need at least 4 angular nodes")
    if not 0.0 <= grading < 0.5:
        raise ValueError("grading must lie in [0, 0.5)")
    t_edges = np.linspace(-1.0, 1.0, n + 1)
    edges = np.pi * t_edges - grading * np.sin(2.0 * np.pi * t_edges)
    weights = np.diff(edges)
    t_mid = 0.5 * (t_edges[:-1] + t_edges[1:])
    nodes = np.pi * t_mid - grading * np.sin(2.0 * np.pi * t_mid)
    return AngularGrid(nodes=nodes, weights=weights)
