import math

import numpy as np

from frac_gauss_markov.FracGMError import DomainError, ParameterError
from frac_gauss_markov.gm_core.GaussMarkovSpec import GaussMarkovSpec
from frac_gauss_markov.gm_core.ProcessParams import OUParams, SOUParams, ProcessKind

# Below this rate the OU functions lose too much precision; use bm_spec for the limit
MIN_OU_RATE: float = 1e-6


def bm_spec(t_max: float = math.inf) -> GaussMarkovSpec:
    """
    Standard Brownian motion: m = 0, h1(t) = t, h2 = 1, r(t) = t
    """
    return GaussMarkovSpec(
        name=ProcessKind.BM.value,
        m=lambda t: np.zeros_like(t, dtype=float),
        h1=lambda t: np.asarray(t, dtype=float) * 1.0,
        h2=lambda t: np.ones_like(t, dtype=float),
        r=lambda t: np.asarray(t, dtype=float) * 1.0,
        r0=0.0,
        t_max=t_max
    )


def ou_spec(p: OUParams, t_max: float = math.inf) -> GaussMarkovSpec:
    """
    The non-stationary OU process started at y.
    :param p: OU parameters, with mu no smaller than MIN_OU_RATE
    :type p: OUParams
    :raises ParameterError: if mu is below MIN_OU_RATE
    """
    if p.mu < MIN_OU_RATE:
        raise ParameterError(f"mu={p.mu} is below {MIN_OU_RATE}; use bm_spec for the Brownian limit")
    mu, sigma, beta, y = p.mu, p.sigma, p.beta, p.y
    scale = sigma ** 2 / (2 * mu)

    return GaussMarkovSpec(
        name=ProcessKind.OU.value,
        m=lambda t: beta + np.exp(-mu * np.asarray(t, dtype=float)) * (y - beta),
        h1=lambda t: 2 * scale * np.sinh(mu * np.asarray(t, dtype=float)),
        h2=lambda t: np.exp(-mu * np.asarray(t, dtype=float)),
        r=lambda t: scale * np.expm1(2 * mu * np.asarray(t, dtype=float)),
        r0=0.0,
        params=p.to_metadata(),
        t_max=t_max
    )


def sou_spec(p: SOUParams, t_max: float = math.inf) -> GaussMarkovSpec:
    """
    The stationary OU process, Y(t) = e^{-mu t} B(r(t)) with r(t) = sigma^2/(2 mu) e^{2 mu t}.
    """
    mu = p.mu
    scale = p.r0

    return GaussMarkovSpec(
        name=ProcessKind.SOU.value,
        m=lambda t: np.zeros_like(t, dtype=float),
        h1=lambda t: scale * np.exp(mu * np.asarray(t, dtype=float)),
        h2=lambda t: np.exp(-mu * np.asarray(t, dtype=float)),
        r=lambda t: scale * np.exp(2 * mu * np.asarray(t, dtype=float)),
        r0=scale,
        params=p.to_metadata(),
        t_max=t_max
    )


def kernel(spec: GaussMarkovSpec, s: float, t: float) -> float:
    """
    Evaluates the factorised covariance h1(min(s, t)) * h2(max(s, t)).
    :raises DomainError: if either time is negative
    """
    if s < 0 or t < 0:
        raise DomainError(f"kernel times must be nonnegative, instead got s={s}, t={t}")
    return spec.c(s, t)


def ou_mean(p: OUParams, t: float) -> float:
    if t < 0:
        raise DomainError(f"t must be nonnegative, instead got {t}")
    return p.beta + math.exp(-p.mu * t) * (p.y - p.beta)


def ou_var(p: OUParams, t: float) -> float:
    if t < 0:
        raise DomainError(f"t must be nonnegative, instead got {t}")
    return -p.sigma ** 2 / (2 * p.mu) * math.expm1(-2 * p.mu * t)


def sou_var(p: SOUParams) -> float:
    return p.r0
