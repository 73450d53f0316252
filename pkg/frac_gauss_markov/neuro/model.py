import logging
from typing import Optional

import numpy as np

from frac_gauss_markov.FracGMError import GridError, UnsupportedSpecError
from frac_gauss_markov.frac_cov import figm_mean, fiou_cov, fiou_var, fisou_cov, fisou_var, CrossTerm
from frac_gauss_markov.gm_core import OUParams, SOUParams, ou_spec
from frac_gauss_markov.neuro.NeuronParams import NeuronParams
from frac_gauss_markov.quadrature import FracOrder, QuadratureConfig, gamma_fn
from frac_gauss_markov.simulate import GENERATOR_ID, PathEnsemble, TimeGrid, pathwise_rl_integral, simulate_ou_exact

LOGGER_NAME: str = "frac-gm"


def ou_params_for(p: NeuronParams) -> OUParams:
    """
    The noise eta is an OU process with mu = 1/tau, sigma = varsigma/tau, beta = I0, y = eta0
    """
    if p.stationary_start:
        raise UnsupportedSpecError("A stationary start has no deterministic initial value; use sou_params_for")
    return OUParams(mu=1 / p.tau, sigma=p.varsigma / p.tau, beta=p.I0, y=float(p.eta0))


def sou_params_for(p: NeuronParams) -> SOUParams:
    """
    Fluctuations eta - I0 of a stationary start form an SOU process with mu = 1/tau, sigma = varsigma/tau
    """
    return SOUParams(mu=1 / p.tau, sigma=p.varsigma / p.tau)


def _power_law(t, order: FracOrder):
    # RL integral of the constant 1
    return np.asarray(t, dtype=float) ** order.alpha / gamma_fn(order.alpha + 1)


def simulate_eta(p: NeuronParams, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
    """
    Coloured-noise input paths from the exact OU transition
        eta_{k+1} = I0 + (eta_k - I0) e^{-h/tau} + xi_k,  var xi_k = varsigma^2/(2 tau) (1 - e^{-2h/tau})
    :param grid: uniform grid starting at t=0
    """
    if not grid.includes_origin or not grid.uniform:
        raise GridError("simulate_eta needs a uniform grid starting at t=0")
    start: Optional[float] = None if p.stationary_start else float(p.eta0)
    values = simulate_ou_exact(1 / p.tau, p.varsigma / p.tau, p.I0, start, grid, n_paths, seed)
    logging.getLogger(LOGGER_NAME).debug(f"Simulated {n_paths} eta paths, stationary start={p.stationary_start}")

    return PathEnsemble(values=values, grid=grid, seed=seed, generator_id=GENERATOR_ID,
                        metadata={'process': 'eta', **p.to_metadata()})


def simulate_voltage(p: NeuronParams, eta_paths: PathEnsemble, alpha, grid: Optional[TimeGrid] = None) -> PathEnsemble:
    """
    V(t_k) = (g_L V_L / C_m) t_k^a / Gamma(a+1) + (1/C_m) I^a(eta)(t_k), the left-inverse solution with V0 = 0.
    :param eta_paths: ensemble from simulate_eta
    :param grid: optional grid the voltage is expected on
    :raises GridError: if grid differs from the grid of eta_paths
    """
    order = FracOrder.of(alpha)
    if grid is not None and grid != eta_paths.grid:
        raise GridError("Voltage grid does not match the grid of the eta paths")
    integral = pathwise_rl_integral(eta_paths, order)
    values = p.drift * _power_law(eta_paths.grid.times, order) + integral.values / p.C_m

    return eta_paths.with_values(values, process='voltage', alpha=order.alpha)


def voltage_mean(p: NeuronParams, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Mean membrane voltage. A deterministic start uses the fractional integral of the OU mean;
    a stationary start has E eta = I0.
    """
    order = FracOrder.of(alpha)
    deterministic = p.drift * float(_power_law(t, order))
    if p.stationary_start:
        return deterministic + p.I0 * float(_power_law(t, order)) / p.C_m
    return deterministic + figm_mean(ou_spec(ou_params_for(p)), t, order, cfg) / p.C_m


def voltage_cov(p: NeuronParams, u: float, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Voltage covariance: FIOU covariance / C_m^2 for a deterministic start, FISOU covariance / C_m^2
    for a stationary start
    """
    if p.stationary_start:
        return fisou_cov(sou_params_for(p), u, t, alpha, cfg, CrossTerm.INDEPENDENT) / p.C_m ** 2
    return fiou_cov(ou_params_for(p), u, t, alpha, cfg) / p.C_m ** 2


def voltage_var(p: NeuronParams, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    if p.stationary_start:
        return fisou_var(sou_params_for(p), t, alpha, cfg, CrossTerm.INDEPENDENT) / p.C_m ** 2
    return fiou_var(ou_params_for(p), t, alpha, cfg) / p.C_m ** 2
