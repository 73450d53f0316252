import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Union

import numpy as np
from numpy.random import Generator, PCG64, SeedSequence
from scipy import stats
from tqdm import tqdm

from frac_gauss_markov.FracGMError import GridError, NumericError, NotPositiveDefiniteError, ParameterError, DomainError
from frac_gauss_markov.simulate.CovMatrix import CovMatrix, CholeskyFactor
from frac_gauss_markov.simulate.PathEnsemble import PathEnsemble
from frac_gauss_markov.simulate.TimeGrid import TimeGrid

LOGGER_NAME: str = "frac-gm"
GENERATOR_ID: str = "numpy.PCG64/SeedSequence(seed,spawn_key=(path,))/standard_normal"
JITTER_LEVELS: tuple[float, ...] = (1e-12, 1e-10, 1e-8)


def substream(seed: int, index: int) -> Generator:
    """
    Independent generator for one path. It depends only on (seed, index), so ensembles do not depend on
    generation order or on the degree of parallelism.
    """
    if seed < 0 or index < 0:
        raise ParameterError(f"seed and path index must be nonnegative, instead got seed={seed}, index={index}")
    return Generator(PCG64(SeedSequence(entropy=seed, spawn_key=(index,))))


def derive_seed(seed: int, index: int) -> int:
    """
    A distinct 32-bit seed for the index-th member of a family of ensembles drawn from one user seed
    """
    if seed < 0 or index < 0:
        raise ParameterError(f"seed and index must be nonnegative, instead got seed={seed}, index={index}")
    return int(SeedSequence([seed, index]).generate_state(1)[0])


def standard_normals(seed: int, n_paths: int, size: int) -> np.ndarray:
    """
    :return: an (n_paths, size) array whose row i is drawn from substream(seed, i)
    """
    if n_paths < 0:
        raise ParameterError(f"n_paths must be nonnegative, instead got {n_paths}")
    z = np.empty((n_paths, size))
    for i in range(n_paths):
        z[i] = substream(seed, i).standard_normal(size)
    return z


def build_cov_matrix(cov_fn: Callable[[float, float], float], grid: TimeGrid, source: str = '',
                     threads: int = 1, progress: bool = False) -> CovMatrix:
    """
    Evaluates cov_fn on the upper triangle of the grid and mirrors it.
    :param cov_fn: covariance function of two times
    :param grid: evaluation grid, excluding t=0
    :param source: descriptor recorded on the matrix
    :param threads: number of worker threads for the entry evaluations
    :param progress: show a tqdm progress bar
    :raises GridError: if the grid contains t=0
    :raises NumericError: if an entry is not finite
    """
    if grid.includes_origin:
        raise GridError("Covariance matrices are built on grids excluding t=0, where the variance vanishes")
    times = grid.times
    n = len(grid)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    logging.getLogger(LOGGER_NAME).debug(f"Building {n}x{n} covariance matrix for {source or 'custom kernel'}")

    def evaluate(pair: tuple[int, int]) -> float:
        return cov_fn(times[pair[0]], times[pair[1]])

    entries = np.empty((n, n))
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        values = executor.map(evaluate, pairs)
        for (i, j), value in tqdm(zip(pairs, values), total=len(pairs), desc="Covariance matrix",
                                  unit="entries", leave=False, disable=not progress):
            if not math.isfinite(value):
                raise NumericError(f"Non-finite covariance entry at ({i}, {j}): {value}")
            entries[i, j] = value
            entries[j, i] = value

    return CovMatrix(entries=entries, source=source, grid=grid)


def cholesky_factor(C: CovMatrix) -> CholeskyFactor:
    """
    Cholesky factorisation with a jitter fallback. When the plain factorisation fails, eps * max(diag)
    is added to the diagonal for eps in JITTER_LEVELS until it succeeds.
    :raises NotPositiveDefiniteError: if the factorisation fails at the largest jitter
    """
    logger = logging.getLogger(LOGGER_NAME)
    try:
        lower = np.linalg.cholesky(C.entries)
        return CholeskyFactor(lower=lower, jitter=0.0, source=C.source, grid=C.grid)
    except np.linalg.LinAlgError:
        pass
    scale = float(np.max(np.diag(C.entries))) if C.n else 0.0
    identity = np.eye(C.n)
    for eps in JITTER_LEVELS:
        try:
            lower = np.linalg.cholesky(C.entries + eps * scale * identity)
        except np.linalg.LinAlgError:
            logger.debug(f"Cholesky failed with jitter {eps:g} for {C.source}")
            continue
        logger.info(f"Cholesky succeeded with jitter {eps:g} for {C.source}")
        return CholeskyFactor(lower=lower, jitter=eps, source=C.source, grid=C.grid)

    raise NotPositiveDefiniteError(f"Covariance matrix for {C.source or 'custom kernel'} is not positive definite "
                                   f"after jitter {JITTER_LEVELS[-1]:g}")


def sample_paths(L: Union[CholeskyFactor, np.ndarray], n_paths: int, seed: int,
                 grid: Optional[TimeGrid] = None, metadata: Optional[dict] = None) -> PathEnsemble:
    """
    Each path is L z with z standard Gaussian from substream(seed, path index).
    Reusing a seed reuses the same z across calls, which gives comparable trajectories for different orders.
    :param L: lower Cholesky factor (a CholeskyFactor carries its own grid)
    :param n_paths: number of paths; 0 gives an empty ensemble
    :param seed: nonnegative integer seed
    :param grid: grid of the factor, required when L is a bare array
    """
    if isinstance(L, CholeskyFactor):
        grid = grid or L.grid
        metadata = {'source': L.source, 'jitter': L.jitter, **(metadata or {})}
        L = L.lower
    if grid is None:
        raise GridError("sample_paths needs the grid of the Cholesky factor")
    L = np.asarray(L, dtype=float)
    if L.shape != (len(grid), len(grid)):
        raise GridError(f"Factor of shape {L.shape} does not match a grid of {len(grid)} times")
    z = standard_normals(seed, n_paths, len(grid))
    values = z @ L.T

    return PathEnsemble(values=values, grid=grid, seed=seed, generator_id=GENERATOR_ID, metadata=metadata or {})


def mc_cov_estimate(ensemble: PathEnsemble, i: int, j: int) -> tuple[float, float]:
    """
    Unbiased sample covariance of the paths at grid indices i and j, with the standard error
    taken from the spread of the per-path centred products.
    :return: (estimate, std_error)
    :raises DomainError: if an index is outside the grid
    :raises ParameterError: if the ensemble has fewer than 2 paths
    """
    n_times = len(ensemble.grid)
    if not (0 <= i < n_times and 0 <= j < n_times):
        raise DomainError(f"Indices ({i}, {j}) are out of range for a grid of {n_times} times")
    n = ensemble.n_paths
    if n < 2:
        raise ParameterError(f"A covariance estimate needs at least 2 paths, instead got {n}")
    x = ensemble.values[:, i]
    y = ensemble.values[:, j]
    products = (x - x.mean()) * (y - y.mean())
    estimate = float(products.sum() / (n - 1))
    std_error = float(products.std(ddof=1) / math.sqrt(n))

    return estimate, std_error


def mc_var_profile(ensemble: PathEnsemble) -> tuple[np.ndarray, np.ndarray]:
    """
    :return: (variance, std_error) at every grid time
    """
    n = ensemble.n_paths
    if n < 2:
        raise ParameterError(f"A variance estimate needs at least 2 paths, instead got {n}")
    centred = ensemble.values - ensemble.values.mean(axis=0)
    squares = centred ** 2
    return squares.sum(axis=0) / (n - 1), squares.std(axis=0, ddof=1) / math.sqrt(n)


def mc_mean_profile(ensemble: PathEnsemble) -> tuple[np.ndarray, np.ndarray]:
    """
    :return: (mean, std_error) at every grid time
    """
    n = ensemble.n_paths
    if n < 2:
        raise ParameterError(f"A mean estimate needs at least 2 paths, instead got {n}")
    return ensemble.values.mean(axis=0), ensemble.values.std(axis=0, ddof=1) / math.sqrt(n)


def ks_normal_statistic(samples: np.ndarray, variance: float) -> tuple[float, float]:
    """
    One-sample Kolmogorov-Smirnov test of samples against N(0, variance).
    :return: (statistic, p_value)
    """
    if not variance > 0:
        raise ParameterError(f"variance must be positive, instead got {variance}")
    result = stats.kstest(np.asarray(samples, dtype=float), 'norm', args=(0.0, math.sqrt(variance)))
    return float(result.statistic), float(result.pvalue)


def ks_critical_value(n: int, level: float = 0.01) -> float:
    """
    Critical value of the one-sample KS statistic for n samples at the given significance level
    """
    return float(stats.kstwo.ppf(1 - level, n))
