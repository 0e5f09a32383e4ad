"""Hardy-Littlewood type maximal operators.

Three variants, pointwise equivalent on the weighted line:

  * dunkl_maximal: averages of the translated function over origin balls,
    computed spectrally as clamped convolutions with ball indicators (one
    transform of |f| total, one multiplier-and-invert per radius);
  * centered_maximal: direct averages of |f| over the annular balls B(x, rho),
    exact on the grid via prefix sums in the |x| coordinate;
  * interval_maximal: direct averages over metric intervals I(x, rho), exact
    via prefix sums in x.

All three take the supremum over a finite radius grid.  Windows reaching past
the sampled domain [-L, L] are averaged over their clipped part while the
denominator keeps the full closed-form measure, so values within rho_max of
the boundary are depressed; quantitative suites only consult |x| <= L/2.
"""

from __future__ import annotations

import numpy as np

from ._windows import FoldedWindowMass, LineWindowMass
from .grid import GridFunction
from .measure import ball_measure_origin, weight_antiderivative
from .params import DunklParams
from .translation import ball_convolutions

__all__ = ["dunkl_maximal", "centered_maximal", "interval_maximal"]


def _check_radii(f: GridFunction, rho_grid) -> list:
    rhos = [float(r) for r in rho_grid]
    if not rhos:
        raise ValueError("rho_grid must be non-empty")
    if any(not np.isfinite(r) or r <= 0 for r in rhos):
        raise ValueError("rho_grid entries must be positive and finite")
    return rhos


def dunkl_maximal(f: GridFunction, rho_grid) -> GridFunction:
    """sup over rho of mu(B_rho)^{-1} * (|f| * chi_{B_rho})(x), clamped at 0."""
    rhos = _check_radii(f, rho_grid)
    conv = ball_convolutions(abs(f), rhos, clamp=True)
    measures = np.array([ball_measure_origin(f.grid.params, r) for r in rhos])
    return GridFunction(f.grid, np.max(conv / measures[:, None], axis=0))


def _ball_measure_vec(params: DunklParams, x: np.ndarray, r: float) -> np.ndarray:
    a = np.abs(x)
    e = 2.0 * params.kappa + 2.0
    c = params.c_kappa / (params.kappa + 1.0)
    outer = (a + r) ** e
    inner = np.where(a > r, np.abs(a - r) ** e, 0.0)
    return c * (outer - inner)


def centered_maximal(f: GridFunction, rho_grid) -> GridFunction:
    """sup over rho of the average of |f| over the annular ball B(x, rho)."""
    rhos = _check_radii(f, rho_grid)
    grid = f.grid
    half = grid.node_count // 2
    s = grid.positive_nodes
    mass = FoldedWindowMass(grid, np.abs(f.values))
    best = np.zeros(half)
    for rho in rhos:
        num = mass.window(np.maximum(0.0, s - rho), s + rho)
        avg = num / _ball_measure_vec(grid.params, s, rho)
        np.maximum(best, avg, out=best)
    return GridFunction(grid, np.concatenate([best[::-1], best]))


def interval_maximal(f: GridFunction, rho_grid) -> GridFunction:
    """sup over rho of the average of |f| over the interval I(x, rho)."""
    rhos = _check_radii(f, rho_grid)
    grid = f.grid
    x = grid.nodes
    mass = LineWindowMass(grid, np.abs(f.values))
    best = np.zeros(x.size)
    for rho in rhos:
        denom = weight_antiderivative(grid.params, x + rho) - weight_antiderivative(
            grid.params, x - rho
        )
        avg = mass.window(x - rho, x + rho) / denom
        np.maximum(best, avg, out=best)
    return GridFunction(grid, best)
