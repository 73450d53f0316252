import logging
import math
from typing import Optional, Union

import numpy as np

from frac_gauss_markov.FracGMError import GridError, UnsupportedSpecError
from frac_gauss_markov.gm_core import OUParams, SOUParams
from frac_gauss_markov.quadrature import FracOrder, gamma_fn
from frac_gauss_markov.simulate.PathEnsemble import PathEnsemble
from frac_gauss_markov.simulate.TimeGrid import TimeGrid
from frac_gauss_markov.simulate.sampling import GENERATOR_ID, standard_normals

LOGGER_NAME: str = "frac-gm"


def _require_origin_grid(grid: TimeGrid, uniform: bool):
    if not grid.includes_origin:
        raise GridError("Underlying paths must start at t=0")
    if uniform and not grid.uniform:
        raise UnsupportedSpecError("Pathwise fractional integration needs a uniform grid")


def product_integration_weights(n_steps: int, h: float, alpha) -> np.ndarray:
    """
    Lower-triangular (n_steps+1) x (n_steps+1) matrix W with X = W @ Y, where X_n approximates
    (1/Gamma(a)) int_0^{t_n} (t_n - s)^(a-1) Y(s) ds for Y piecewise linear between the samples.
    The weight (t_n - s)^(a-1) is integrated exactly on every panel:
        X_n = h^a / Gamma(a+2) [A_n Y_0 + sum_{k=1}^n B_{n-k} Y_k]
        A_n = (n-1)^(a+1) - (n-1-a) n^a,  B_0 = 1,  B_j = (j+1)^(a+1) - 2 j^(a+1) + (j-1)^(a+1)
    """
    a = FracOrder.of(alpha).alpha
    size = n_steps + 1
    j = np.arange(size, dtype=float)
    b = np.empty(size)
    b[0] = 1.0
    b[1:] = (j[1:] + 1) ** (a + 1) - 2 * j[1:] ** (a + 1) + (j[1:] - 1) ** (a + 1)
    weights = np.zeros((size, size))
    rows, cols = np.tril_indices(size)
    weights[rows, cols] = b[rows - cols]
    n = j[1:]
    weights[1:, 0] = (n - 1) ** (a + 1) - (n - 1 - a) * n ** a
    weights[0, 0] = 0.0

    return weights * h ** a / gamma_fn(a + 2)


def pathwise_rl_integral(path: Union[PathEnsemble, np.ndarray], alpha, grid: Optional[TimeGrid] = None):
    """
    Fractional Riemann-Liouville integral of sampled paths by product integration.
    The rule is exact for constant and piecewise-linear paths.
    :param path: a PathEnsemble, or a 1-D/2-D array of samples on grid (rows are paths)
    :param alpha: order of the integral
    :param grid: uniform grid starting at t=0, required when path is an array
    :return: the same type as path
    :raises UnsupportedSpecError: if the grid is not uniform
    :raises GridError: if the grid does not start at t=0
    """
    order = FracOrder.of(alpha)
    if isinstance(path, PathEnsemble):
        grid = path.grid
        values = path.values
    else:
        if grid is None:
            raise GridError("pathwise_rl_integral needs the grid of an array path")
        values = np.asarray(path, dtype=float)
    _require_origin_grid(grid, uniform=True)
    if values.shape[-1] != len(grid):
        raise GridError(f"Path of length {values.shape[-1]} does not match a grid of {len(grid)} times")
    if len(grid) == 1:
        integral = np.zeros_like(values)
    else:
        weights = product_integration_weights(len(grid) - 1, grid.h, order)
        integral = values @ weights.T

    if isinstance(path, PathEnsemble):
        return path.with_values(integral, alpha=order.alpha, method='pathwise')
    return integral


def _exact_ou_paths(mu: float, sigma: float, beta: float, start: Optional[float], grid: TimeGrid,
                    n_paths: int, seed: int) -> np.ndarray:
    # start=None draws the starting value from the stationary law N(beta, sigma^2/(2 mu))
    steps = np.diff(grid.times)
    stationary_var = sigma ** 2 / (2 * mu)
    extra = 1 if start is None else 0
    z = standard_normals(seed, n_paths, steps.size + extra)
    values = np.empty((n_paths, len(grid)))
    if start is None:
        values[:, 0] = beta + math.sqrt(stationary_var) * z[:, 0]
    else:
        values[:, 0] = start
    decay = np.exp(-mu * steps)
    noise = np.sqrt(-stationary_var * np.expm1(-2 * mu * steps))
    for k in range(steps.size):
        values[:, k + 1] = beta + (values[:, k] - beta) * decay[k] + noise[k] * z[:, k + extra]
    return values


def simulate_bm(grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
    """
    Brownian paths from independent Gaussian increments, B(0) = 0
    """
    _require_origin_grid(grid, uniform=False)
    steps = np.diff(grid.times)
    z = standard_normals(seed, n_paths, steps.size)
    values = np.zeros((n_paths, len(grid)))
    values[:, 1:] = np.cumsum(z * np.sqrt(steps), axis=1)
    logging.getLogger(LOGGER_NAME).debug(f"Simulated {n_paths} Brownian paths on {len(grid)} times")

    return PathEnsemble(values=values, grid=grid, seed=seed, generator_id=GENERATOR_ID,
                        metadata={'underlying': 'bm'})


def simulate_ou(p: OUParams, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
    """
    OU paths from the exact one-step transition, Y(0) = y
    """
    _require_origin_grid(grid, uniform=False)
    values = _exact_ou_paths(p.mu, p.sigma, p.beta, p.y, grid, n_paths, seed)
    return PathEnsemble(values=values, grid=grid, seed=seed, generator_id=GENERATOR_ID,
                        metadata={'underlying': 'ou', **p.to_metadata()})


def simulate_sou(p: SOUParams, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
    """
    Stationary OU paths: Y(0) drawn from N(0, sigma^2/(2 mu)), then the exact transition
    """
    _require_origin_grid(grid, uniform=False)
    values = _exact_ou_paths(p.mu, abs(p.sigma), 0.0, None, grid, n_paths, seed)
    return PathEnsemble(values=values, grid=grid, seed=seed, generator_id=GENERATOR_ID,
                        metadata={'underlying': 'sou', **p.to_metadata()})


def simulate_ou_exact(mu: float, sigma: float, beta: float, start: Optional[float], grid: TimeGrid,
                      n_paths: int, seed: int) -> np.ndarray:
    """
    Exact-transition OU samples for callers that parameterise the process themselves.
    start=None draws the first value from the stationary law around beta.
    """
    _require_origin_grid(grid, uniform=False)
    return _exact_ou_paths(mu, sigma, beta, start, grid, n_paths, seed)


def pathwise_fractional_ensemble(underlying: PathEnsemble, alpha) -> PathEnsemble:
    """
    Integrates every underlying path and drops the pinned t=0 column, so the result lives on the same
    grid as a Cholesky ensemble.
    """
    integrated = pathwise_rl_integral(underlying, alpha)
    return PathEnsemble(values=integrated.values[:, 1:], grid=integrated.grid.without_origin(),
                        seed=integrated.seed, generator_id=integrated.generator_id,
                        metadata=dict(integrated.metadata))
