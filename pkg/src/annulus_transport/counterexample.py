"""Grazing-set breakdown of the flat-layer expansion, and its repair.

Near a curved boundary the value of the transport solution at a point a
few squared mean free paths off the wall, looking almost tangentially
along it, is controlled by how much optical depth the backward ray
accumulates before it lands on the wall.  At the stretched point
(eta, phi) = (n*eps, eps) with 0 < n < 1/2 that depth is

    * n                      for the flat half-space layer,
    * 1 - sqrt(1 - 2n)       for the curvature-corrected layer

(the nearly tangent chord of a concave circle is much longer than its
normal projection).  With inflow datum G the two layer solutions therefore
settle at

    u_flat(n*eps, eps)  ~ (1 - exp(-n)) * m + exp(-n) * G(eps)
    u_geom(n*eps, eps)  ~ (1 - exp(s - 1)) * m + exp(s - 1) * G(s * eps)

where s = sqrt(1 - 2n) and m is the angular mean at the wall.  The
attenuation factors differ by an amount independent of eps, so the flat
layer misses the true solution by a fixed constant on the grazing set, no
matter how small the mean free path: the classical composite expansion
cannot converge in the sup norm, while the curvature-corrected one does.

:func:`grazing_gap` measures the two layer solutions and checks them
against the closed-form factors; :func:`expansion_errors` measures the sup
error of both composite expansions against a converged solve of the full
annulus problem.
"""

from __future__ import annotations

import numpy as np

from .annulus_solver import solve_annulus
from .expansion import classical_expansion, geometric_expansion
from .geometry import Annulus, flat_forcing, inner_layer_forcing
from .halfspace import solve_half_space

__all__ = [
    "default_datum",
    "flat_prediction",
    "geometric_prediction",
    "grazing_gap",
    "expansion_errors",
]


def default_datum(phi):
    """Inflow datum 2 + cos(phi) used throughout the grazing-set study.

    Even in phi and symmetric about its mean under phi -> pi - phi, so
    every layer problem it feeds has angular mean identically 2; the whole
    effect lives in the attenuation factors.
    """
    return 2.0 + np.cos(phi)


def flat_prediction(n, epsilon, mean, datum=default_datum):
    """Leading-order value of the flat layer at (eta, phi) = (n*eps, eps)."""
    a = np.exp(-np.asarray(n, dtype=float))
    return (1.0 - a) * mean + a * datum(epsilon)


def geometric_prediction(n, epsilon, mean, datum=default_datum):
    """Leading-order value of the curved layer at (eta, phi) = (n*eps, eps)."""
    s = np.sqrt(1.0 - 2.0 * np.asarray(n, dtype=float))
    a = np.exp(s - 1.0)
    return (1.0 - a) * mean + a * datum(s * epsilon)


def grazing_gap(
    epsilon,
    n=0.45,
    annulus=Annulus(),
    datum=default_datum,
    *,
    n_phi=96,
    **solver_kwargs,
):
    """Compare flat and curvature-corrected layers at a grazing point.

    The evaluation point is (eta, phi) = (n*eps, eps); ``n`` should stay
    away from the tangency threshold 1/2, where the backward ray grazes
    the wall and the two branches become numerically indistinguishable.

    Returns a dict with the two computed point values, their closed-form
    predictions, and the gap between the layers.
    """
    if not 0.0 < n < 0.5:
        raise ValueError("n must lie in (0, 1/2)")
    flat = solve_half_space(
        datum, flat_forcing, slab_length=25.0, n_phi=n_phi, **solver_kwargs
    )
    slab = 0.75 * annulus.width / epsilon + 15.0
    geom = solve_half_space(
        datum,
        inner_layer_forcing(epsilon, annulus),
        slab_length=slab,
        n_phi=n_phi,
        **solver_kwargs,
    )
    u_flat = float(flat.evaluate(n * epsilon, epsilon))
    u_geom = float(geom.evaluate(n * epsilon, epsilon))
    return {
        "epsilon": float(epsilon),
        "n": float(n),
        "flat_value": u_flat,
        "flat_predicted": float(flat_prediction(n, epsilon, flat.mean_at(0.0), datum)),
        "geometric_value": u_geom,
        "geometric_predicted": float(
            geometric_prediction(n, epsilon, geom.mean_at(0.0), datum)
        ),
        "gap": abs(u_flat - u_geom),
    }


def _sample_points(annulus, epsilon):
    """Evaluation sets: grazing points at the inner wall, and a bulk grid."""
    r_in, r_out = annulus.r_inner, annulus.r_outer
    rs, ps = [], []
    # grazing set: (eta_in, chi) = (n*eps, k*eps), i.e. phi = -k*eps
    for n in (0.25, 0.35, 0.45):
        for k in (0.5, 1.0, 2.0):
            rs.append(r_in + n * epsilon**2)
            ps.append(-k * epsilon)
    grazing = np.array(rs), np.array(ps)
    # bulk: generic radii and angles away from the layers
    rr, pp = np.meshgrid(
        np.linspace(r_in + 0.3 * annulus.width, r_out - 0.3 * annulus.width, 5),
        np.linspace(-np.pi, np.pi, 9, endpoint=False),
        indexing="ij",
    )
    return grazing, (rr.ravel(), pp.ravel())


def expansion_errors(
    epsilon,
    annulus=Annulus(),
    g_inner=default_datum,
    g_outer=None,
    *,
    n_phi=96,
    **solver_kwargs,
):
    """Sup error of both composite expansions against the full annulus solve.

    Evaluates the converged annulus solution and the two expansions on a
    grazing sample set near the inner wall and on a bulk grid, and returns
    the maximum absolute errors over each set.  ``g_outer=None`` means
    vacuum (zero inflow) at the outer circle.

    The grazing errors are the interesting ones: the classical one settles
    at a fixed constant while the geometric one vanishes with eps.  The
    bulk errors are identical for the two expansions (the layers are cut
    off there) and measure the first-order drift term both of them omit.
    """
    if g_outer is None:
        g_outer = lambda phi: np.zeros_like(np.asarray(phi, dtype=float))
    full = solve_annulus(
        g_outer, g_inner, epsilon, annulus, n_phi=n_phi, **solver_kwargs
    )
    classical = classical_expansion(g_outer, g_inner, epsilon, annulus, n_phi=n_phi)
    geometric = geometric_expansion(g_outer, g_inner, epsilon, annulus, n_phi=n_phi)

    out = {"epsilon": float(epsilon)}
    (r_g, p_g), (r_b, p_b) = _sample_points(annulus, epsilon)
    for label, (r, phi) in (("grazing", (r_g, p_g)), ("bulk", (r_b, p_b))):
        u = full.evaluate(r, phi)
        out[f"classical_{label}_error"] = float(np.abs(u - classical(r, phi)).max())
        out[f"geometric_{label}_error"] = float(np.abs(u - geometric(r, phi)).max())
    return out
