from typing import Callable

import numpy as np

from frac_gauss_markov.FracGMError import UnsupportedSpecError
from frac_gauss_markov.frac_cov.arguments import check_time, ordered_times
from frac_gauss_markov.gm_core import GaussMarkovSpec
from frac_gauss_markov.quadrature import (FracOrder, QuadratureConfig, InnerRegion, nested_singular_integral,
                                          singular_left_integral, weighted_interval_integral, gamma_alpha, gamma_sq)


def split_integrals(h2: Callable, rh2: Callable, u: float, t: float, order: FracOrder,
                    cfg: QuadratureConfig) -> tuple[float, float, float]:
    """
    The three parts of int_0^u ds (u-s)^(a-1) int_0^t dv (t-v)^(a-1) c(s, v) for a process with r0 = 0,
    where c(s, v) = h2(s) h2(v) r(min(s, v)). The inner variable v is split at s and at u.
    :param h2: the h2 function of the process
    :param rh2: the product r * h2 (equal to h1 when r0 = 0)
    :return: (I1, I2, I3) with u <= t
    """
    i1 = nested_singular_integral(lambda s, v: h2(s) * rh2(v), u, t, order, order, InnerRegion.S, cfg)
    i2 = nested_singular_integral(lambda s, v: rh2(s) * h2(v), u, t, order, order, InnerRegion.U, cfg)
    if u == t:
        i3 = 0.0
    else:
        i3 = singular_left_integral(rh2, u, order, cfg) * weighted_interval_integral(h2, u, t, t, order, cfg)

    return i1, i2, i3


def _require_deterministic_start(spec: GaussMarkovSpec):
    if spec.r0 != 0:
        raise UnsupportedSpecError(f"Process {spec.name} has a random start (r0={spec.r0}); "
                                   f"use the stationary OU operations for it")


def _rh2(spec: GaussMarkovSpec) -> Callable:
    return lambda v: spec.r(v) * spec.h2(v)


def figm_mean(spec: GaussMarkovSpec, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Mean of the fractional integral of a Gauss-Markov process, (1/Gamma(a)) int_0^t (t-s)^(a-1) m(s) ds
    """
    t = check_time(t)
    order = FracOrder.of(alpha)
    if t == 0:
        return 0.0
    return singular_left_integral(lambda s: np.asarray(spec.m(s), dtype=float), t, order, cfg) / gamma_alpha(order)


def figm_cov(spec: GaussMarkovSpec, u: float, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Covariance of the fractional integral of a Gauss-Markov process started at a deterministic point.
    :raises UnsupportedSpecError: if the process has r0 != 0
    """
    u, t = ordered_times(u, t)
    _require_deterministic_start(spec)
    order = FracOrder.of(alpha)
    if u == 0:
        return 0.0
    return sum(split_integrals(spec.h2, _rh2(spec), u, t, order, cfg)) / gamma_sq(order)


def figm_var(spec: GaussMarkovSpec, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    On the diagonal the third part vanishes and the second equals the first, so var = 2 I1 / Gamma(a)^2.
    :raises UnsupportedSpecError: if the process has r0 != 0
    """
    t = check_time(t)
    _require_deterministic_start(spec)
    order = FracOrder.of(alpha)
    if t == 0:
        return 0.0
    rh2 = _rh2(spec)
    i1 = nested_singular_integral(lambda s, v: spec.h2(s) * rh2(v), t, t, order, order, InnerRegion.S, cfg)
    return 2 * i1 / gamma_sq(order)
