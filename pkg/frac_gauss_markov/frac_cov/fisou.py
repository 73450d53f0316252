import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from frac_gauss_markov.frac_cov.accuracy import warn_low_order
from frac_gauss_markov.frac_cov.arguments import check_time, ordered_times
from frac_gauss_markov.frac_cov.closed_forms import isou_cov, isou_var
from frac_gauss_markov.frac_cov.fiou import fiou_cov, fiou_var
from frac_gauss_markov.gm_core import SOUParams
from frac_gauss_markov.quadrature import (FracOrder, QuadratureConfig, singular_left_integral,
                                          weighted_interval_integral, gamma_sq)


class CrossTerm(Enum):
    """
    How the covariance between the random start and the later increments enters the FISOU covariance.
    PRINTED clamps e^{2 mu s} - 1 at 1 inside the J2 integral.
    INDEPENDENT sets J2 = 0, the value implied by the start being independent of the increments.
    """
    PRINTED = 'printed'
    INDEPENDENT = 'independent'


DEFAULT_CROSS_TERM: CrossTerm = CrossTerm.INDEPENDENT


@dataclass(frozen=True)
class FisouComponents:
    fiou: float
    j2: float
    j4: float
    gamma_sq: float

    @property
    def total(self) -> float:
        return self.fiou + (2 * self.j2 + self.j4) / self.gamma_sq


def _cross_term(cross_term: Union[CrossTerm, str]) -> CrossTerm:
    if isinstance(cross_term, CrossTerm):
        return cross_term
    return CrossTerm(cross_term)


def _exp_integral(x: float, order: FracOrder, mu: float, cfg: QuadratureConfig) -> float:
    # int_0^x (x - v)^(a-1) e^{-mu v} dv
    if x == 0:
        return 0.0
    return singular_left_integral(lambda v: np.exp(-mu * v), x, order, cfg)


def _clamped_integral(u: float, order: FracOrder, mu: float, cfg: QuadratureConfig) -> float:
    # int_0^u (u - s)^(a-1) e^{-mu s} min{1, e^{2 mu s} - 1} ds, split where the clamp switches
    if u == 0:
        return 0.0
    switch = math.log(2) / (2 * mu)
    below = lambda s: 2 * np.sinh(mu * s)
    above = lambda s: np.exp(-mu * s)
    if u <= switch:
        return singular_left_integral(below, u, order, cfg)
    return (weighted_interval_integral(below, 0.0, switch, u, order, cfg)
            + weighted_interval_integral(above, switch, u, u, order, cfg))


def fisou_components(p: SOUParams, u: float, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig(),
                     cross_term: Union[CrossTerm, str] = DEFAULT_CROSS_TERM) -> FisouComponents:
    """
    Decomposes the FISOU covariance into the FIOU covariance with the same rate and diffusion
    and the J2 and J4 terms contributed by the random start.
    """
    u, t = ordered_times(u, t)
    order = FracOrder.of(alpha)
    cross_term = _cross_term(cross_term)
    scale = p.r0
    fiou = fiou_cov(p.as_ou(), u, t, order, cfg)
    exp_t = _exp_integral(t, order, p.mu, cfg)
    j4 = scale * _exp_integral(u, order, p.mu, cfg) * exp_t
    if cross_term == CrossTerm.PRINTED:
        j2 = scale * _clamped_integral(u, order, p.mu, cfg) * exp_t
    else:
        j2 = 0.0

    return FisouComponents(fiou=fiou, j2=j2, j4=j4, gamma_sq=gamma_sq(order))


def fisou_cov(p: SOUParams, u: float, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig(),
              cross_term: Union[CrossTerm, str] = DEFAULT_CROSS_TERM) -> float:
    """
    Covariance of the fractional integral of the stationary OU process,
    FIOU covariance + (2 J2 + J4) / Gamma(a)^2.
    With the independent cross term, alpha = 1 returns the ISOU closed form.
    """
    u, t = ordered_times(u, t)
    order = FracOrder.of(alpha)
    cross_term = _cross_term(cross_term)
    if order.is_integer_order and cross_term == CrossTerm.INDEPENDENT:
        return isou_cov(p, u, t)
    warn_low_order("fisou", order)
    return fisou_components(p, u, t, order, cfg, cross_term).total


def fisou_var(p: SOUParams, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig(),
              cross_term: Union[CrossTerm, str] = DEFAULT_CROSS_TERM) -> float:
    t = check_time(t)
    order = FracOrder.of(alpha)
    cross_term = _cross_term(cross_term)
    if order.is_integer_order and cross_term == CrossTerm.INDEPENDENT:
        return isou_var(p, t)
    if t == 0:
        return 0.0
    warn_low_order("fisou", order)
    scale = p.r0
    exp_t = _exp_integral(t, order, p.mu, cfg)
    j4 = scale * exp_t ** 2
    j2 = scale * _clamped_integral(t, order, p.mu, cfg) * exp_t if cross_term == CrossTerm.PRINTED else 0.0
    return fiou_var(p.as_ou(), t, order, cfg) + (2 * j2 + j4) / gamma_sq(order)
