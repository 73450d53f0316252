import numpy as np

from frac_gauss_markov.frac_cov.accuracy import warn_low_order
from frac_gauss_markov.frac_cov.arguments import check_time, ordered_times
from frac_gauss_markov.frac_cov.closed_forms import iou_cov, iou_var, iou_mean
from frac_gauss_markov.frac_cov.figm import split_integrals, figm_mean
from frac_gauss_markov.gm_core import OUParams, ou_spec
from frac_gauss_markov.quadrature import FracOrder, QuadratureConfig, InnerRegion, nested_singular_integral, gamma_sq


def _ou_functions(p: OUParams):
    # h2(s) = e^{-mu s}, r(v) h2(v) = sigma^2/mu sinh(mu v)
    mu, sigma = p.mu, p.sigma
    h2 = lambda s: np.exp(-mu * np.asarray(s, dtype=float))
    rh2 = lambda v: sigma ** 2 / mu * np.sinh(mu * np.asarray(v, dtype=float))
    return h2, rh2


def fiou_components(p: OUParams, u: float, t: float, alpha,
                    cfg: QuadratureConfig = QuadratureConfig()) -> tuple[float, float, float]:
    """
    :return: the unnormalised parts (I1, I2, I3) of the FIOU covariance, with u <= t after ordering
    """
    u, t = ordered_times(u, t)
    order = FracOrder.of(alpha)
    if u == 0:
        return 0.0, 0.0, 0.0
    h2, rh2 = _ou_functions(p)
    return split_integrals(h2, rh2, u, t, order, cfg)


def fiou_cov(p: OUParams, u: float, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Covariance of the fractional integral of the OU process, (I1 + I2 + I3) / Gamma(a)^2.
    The initial value y and asymptotic mean beta only shift the mean.
    """
    u, t = ordered_times(u, t)
    order = FracOrder.of(alpha)
    if order.is_integer_order:
        return iou_cov(p, u, t)
    warn_low_order("fiou", order)
    return sum(fiou_components(p, u, t, order, cfg)) / gamma_sq(order)


def fiou_var(p: OUParams, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    t = check_time(t)
    order = FracOrder.of(alpha)
    if order.is_integer_order:
        return iou_var(p, t)
    if t == 0:
        return 0.0
    warn_low_order("fiou", order)
    h2, rh2 = _ou_functions(p)
    i1 = nested_singular_integral(lambda s, v: h2(s) * rh2(v), t, t, order, order, InnerRegion.S, cfg)
    return 2 * i1 / gamma_sq(order)


def fiou_mean(p: OUParams, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    order = FracOrder.of(alpha)
    if order.is_integer_order:
        return iou_mean(p, t)
    return figm_mean(ou_spec(p), t, order, cfg)
