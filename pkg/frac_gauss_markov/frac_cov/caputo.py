from enum import Enum
from typing import Union

import numpy as np
from scipy.interpolate import CubicSpline

from frac_gauss_markov.FracGMError import DomainError, ResolutionError, GridError
from frac_gauss_markov.quadrature import FracOrder, QuadratureConfig, singular_left_integral, gamma_fn


class CaputoMethod(Enum):
    """
    L1 integrates the weight exactly against the piecewise-linear interpolant of the samples.
    SPLINE differentiates a cubic spline and integrates the weight with the substituted Gauss-Legendre rule.
    """
    L1 = 'l1'
    SPLINE = 'spline'


MIN_SAMPLES: dict[CaputoMethod, int] = {
    CaputoMethod.L1: 2,
    CaputoMethod.SPLINE: 4
}


def _prepare_samples(times, values, t: float, method: CaputoMethod) -> tuple[np.ndarray, np.ndarray]:
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.ndim != 1 or times.shape != values.shape:
        raise GridError(f"times and values must be 1-D arrays of equal length, got {times.shape} and {values.shape}")
    if times.size and times[0] != 0:
        raise GridError(f"Samples must start at t=0, instead start at {times[0]}")
    if np.any(np.diff(times) <= 0):
        raise GridError("Sample times must be strictly increasing")
    if t < 0:
        raise DomainError(f"t must be nonnegative, instead got {t}")
    if times.size and t > times[-1]:
        raise DomainError(f"t={t} lies beyond the last sample time {times[-1]}")
    needed = MIN_SAMPLES[method]
    available = int(np.sum(times <= t))
    if t > 0 and times[times <= t][-1] < t:
        available += 1
    if available < needed:
        raise ResolutionError(f"Caputo derivative at t={t} with method {method.value} needs at least {needed} "
                              f"samples on [0, t], found {available}")
    return times, values


def _l1(times: np.ndarray, values: np.ndarray, t: float, a: float) -> float:
    # Panels [t_k, t_k+1] clipped to [0, t], each with the slope of the linear interpolant
    slopes = np.diff(values) / np.diff(times)
    left = times[:-1]
    right = np.minimum(times[1:], t)
    mask = left < t
    left, right, slopes = left[mask], right[mask], slopes[mask]
    if a == 1:
        return float(slopes[-1])
    moments = (t - left) ** (1 - a) - (t - right) ** (1 - a)
    return float(np.sum(slopes * moments) / gamma_fn(2 - a))


def _spline(times: np.ndarray, values: np.ndarray, t: float, a: float, cfg: QuadratureConfig) -> float:
    derivative = CubicSpline(times, values).derivative()
    if a == 1:
        return float(derivative(t))
    beta = 1 - a
    if beta < FracOrder.ALPHA_MIN:
        # The weight (t-s)^(-a) is too close to non-integrable for the substituted rule
        raise ResolutionError(f"Spline Caputo derivative is unavailable for alpha={a}; use the L1 method")
    return singular_left_integral(derivative, t, beta, cfg) / (gamma_fn(beta + 1) / beta)


def caputo_derivative(times, values, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig(),
                      method: Union[CaputoMethod, str] = CaputoMethod.L1) -> float:
    """
    Caputo derivative (1/Gamma(1-a)) int_0^t f'(s) (t-s)^(-a) ds of a sampled function.
    At alpha = 1 this is the ordinary derivative of the interpolant at t.
    :param times: sample times, strictly increasing and starting at 0
    :param values: f at the sample times
    :param t: evaluation time, within the sampled range
    :param alpha: order of the derivative
    :param cfg: quadrature configuration, used by the spline method
    :param method: CaputoMethod.L1 (default) or CaputoMethod.SPLINE
    :raises ResolutionError: if too few samples lie in [0, t]
    """
    order = FracOrder.of(alpha)
    method = CaputoMethod(method) if isinstance(method, str) else method
    times, values = _prepare_samples(times, values, t, method)
    if t == 0:
        return 0.0
    if method == CaputoMethod.SPLINE:
        return _spline(times, values, t, order.alpha, cfg)
    return _l1(times, values, t, order.alpha)
