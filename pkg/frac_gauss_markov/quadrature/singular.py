import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Union

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import gamma

from frac_gauss_markov.FracGMError import DomainError, NumericError, ParameterError
from frac_gauss_markov.quadrature.FracOrder import FracOrder
from frac_gauss_markov.quadrature.QuadratureConfig import QuadratureConfig

"""
Every integral here carries a weight (x - s)^(a - 1) that is singular at s = x when a < 1.
The substitution w = (x - s)^a maps the weight away:
    int_lo^hi (x - s)^(a - 1) f(s) ds = (1/a) int_{(x - hi)^a}^{(x - lo)^a} f(x - w^(1/a)) dw
The transformed integrand is bounded, and the composite Gauss-Legendre rule is graded towards w = 0.
"""

LOGGER_NAME: str = "frac-gm"

Order = Union[FracOrder, float]


class InnerRegion(Enum):
    """
    Inner integration interval of a nested integral over the outer variable s in (0, u)
    """
    S = 'S'  # (0, s)
    U = 'U'  # (s, u)
    T_FROM_U = 'T_from_U'  # (u, t)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    converged: bool


def _order_value(alpha: Order) -> float:
    """
    Accepts validated FracOrder objects or raw floats in (0, 1]. Raw floats are used internally,
    e.g. the order 1 - alpha of the Caputo derivative.
    """
    if isinstance(alpha, FracOrder):
        return alpha.alpha
    value = float(alpha)
    if not (0 < value <= 1):
        raise ParameterError(f"integration order must lie in (0, 1], instead got {value}")
    return value


def gamma_fn(x: float) -> float:
    return float(gamma(x))


def gamma_alpha(alpha: Order) -> float:
    """
    Gamma(alpha) evaluated as Gamma(alpha + 1)/alpha, away from the pole at 0
    """
    a = _order_value(alpha)
    return float(gamma(a + 1)) / a


def gamma_sq(alpha: Order) -> float:
    return gamma_alpha(alpha) ** 2


@lru_cache(maxsize=32)
def _reference_rule(nodes_per_panel: int, panels: int, grading: float) -> tuple[np.ndarray, np.ndarray]:
    # Composite rule on [0, 1], graded towards 0
    x, w = leggauss(nodes_per_panel)
    edges = (np.arange(panels + 1) / panels) ** grading
    lo, hi = edges[:-1, None], edges[1:, None]
    nodes = (lo + 0.5 * (hi - lo) * (x + 1)).ravel()
    weights = (0.5 * (hi - lo) * w).ravel()
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _gap_rule(near, far, alpha: Order, cfg: QuadratureConfig) -> tuple[np.ndarray, np.ndarray]:
    """
    Distances d = x - v to the singular end and weights for the integral of (x - v)^(alpha - 1) psi(v)
    over near <= x - v <= far. d comes from the substituted node, not from x - v.
    """
    a_val = _order_value(alpha)
    ref_nodes, ref_weights = _reference_rule(cfg.nodes_per_panel, cfg.panels, cfg.grading)
    near = np.maximum(np.asarray(near, dtype=float), 0.0)[..., None]
    far = np.maximum(np.asarray(far, dtype=float), 0.0)[..., None]
    w_lo = near ** a_val
    width = far ** a_val - w_lo
    gap = np.clip((w_lo + width * ref_nodes) ** (1.0 / a_val), near, far)
    weights = width * ref_weights / a_val

    return gap, weights


def weighted_nodes(a, b, x, alpha: Order, cfg: QuadratureConfig) -> tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights for int_a^b (x - v)^(alpha - 1) psi(v) dv, with a <= b <= x.
    a, b and x broadcast against each other; the node axis is appended last.
    :return: (v, weights) such that the integral equals sum(weights * psi(v), axis=-1)
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    x = np.asarray(x, dtype=float)
    gap, weights = _gap_rule(x - b, x - a, alpha, cfg)
    v = np.clip(x[..., None] - gap, a[..., None], b[..., None])

    return v, weights


def _finite_sum(values: np.ndarray, weights: np.ndarray, axis: int = -1) -> np.ndarray:
    if not np.all(np.isfinite(values)):
        raise NumericError("Integrand produced a non-finite sample")
    return np.sum(values * weights, axis=axis)


def weighted_interval_integral(psi: Callable, a: float, b: float, t: float, alpha: Order,
                               cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Computes int_a^b (t - v)^(alpha - 1) psi(v) dv for 0 <= a <= b <= t.
    :param psi: integrand, vectorised over numpy arrays of times
    :raises DomainError: if the bounds are not ordered as 0 <= a <= b <= t
    :raises NumericError: if psi returns a non-finite sample
    """
    if not (0 <= a <= b <= t):
        raise DomainError(f"Bounds must satisfy 0 <= a <= b <= t, instead got a={a}, b={b}, t={t}")
    if a == b:
        return 0.0
    v, weights = weighted_nodes(a, b, t, alpha, cfg)
    return float(_finite_sum(np.asarray(psi(v), dtype=float), weights))


def singular_left_integral(phi: Callable, u: float, alpha: Order,
                           cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Computes int_0^u (u - s)^(alpha - 1) phi(s) ds. The 1/Gamma(alpha) normalisation is left to callers.
    :param phi: integrand, vectorised over numpy arrays of times
    :param u: upper limit, nonnegative
    :param alpha: order of the weight
    :param cfg: quadrature configuration
    :raises DomainError: if u is negative
    :raises NumericError: if phi returns a non-finite sample
    """
    if u < 0:
        raise DomainError(f"Upper limit must be nonnegative, instead got u={u}")
    return weighted_interval_integral(phi, 0.0, u, u, alpha, cfg)


def _check_ordered(u: float, t: float):
    if u < 0 or t < 0:
        raise DomainError(f"Times must be nonnegative, instead got u={u}, t={t}")
    if u > t:
        raise DomainError(f"Expected u <= t, instead got u={u}, t={t}")


def compute_J(u: float, t: float, alpha: Order, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    J(u, t) = int_0^u s (u - s)^(alpha - 1) (t - s)^alpha ds
    """
    _check_ordered(u, t)
    a = _order_value(alpha)
    if u == 0:
        return 0.0
    gap, weights = _gap_rule(0.0, u, alpha, cfg)
    return float(_finite_sum((u - gap) * ((t - u) + gap) ** a, weights))


def compute_H(u: float, t: float, alpha: Order, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    H(u, t) = int_0^u (u - s)^(alpha - 1) (t - s)^alpha ds
    """
    _check_ordered(u, t)
    a = _order_value(alpha)
    if u == 0:
        return 0.0
    gap, weights = _gap_rule(0.0, u, alpha, cfg)
    return float(_finite_sum(((t - u) + gap) ** a, weights))


def nested_singular_integral(psi: Callable, u: float, t: float, alpha_outer: Order, alpha_inner: Order,
                             inner_upper: InnerRegion, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Computes int_0^u ds (u - s)^(alpha_outer - 1) int_region dv (t - v)^(alpha_inner - 1) psi(s, v)
    where the inner region is (0, s), (s, u) or (u, t) as selected by inner_upper.
    Both weights go through the power substitution, so the corner s = v = u = t is handled.
    The inner bounds are expressed as distances from t, built from the outer distances u - s.
    :param psi: integrand psi(s, v), vectorised over broadcast numpy arrays
    :type psi: Callable
    :param inner_upper: which inner interval to integrate over
    :type inner_upper: InnerRegion
    :raises DomainError: if not 0 <= u <= t
    """
    _check_ordered(u, t)
    if u == 0:
        return 0.0
    outer_gap, outer_weights = _gap_rule(0.0, u, alpha_outer, cfg)
    s = u - outer_gap
    t_minus_u = t - u
    if inner_upper == InnerRegion.S:
        lo, hi = np.zeros_like(s), s
        near, far = t_minus_u + outer_gap, np.full_like(s, t)
    elif inner_upper == InnerRegion.U:
        lo, hi = s, np.full_like(s, u)
        near, far = np.full_like(s, t_minus_u), t_minus_u + outer_gap
    elif inner_upper == InnerRegion.T_FROM_U:
        lo, hi = np.full_like(s, u), np.full_like(s, t)
        near, far = np.zeros_like(s), np.full_like(s, t_minus_u)
    else:
        raise ParameterError(f"inner_upper must be an InnerRegion, instead got {inner_upper!r}")
    inner_gap, inner_weights = _gap_rule(near, far, alpha_inner, cfg)
    v = np.clip(t - inner_gap, lo[:, None], hi[:, None])
    values = np.asarray(psi(s[:, None], v), dtype=float)
    inner = _finite_sum(values, inner_weights)

    return float(np.sum(inner * outer_weights))


def with_error_estimate(fn: Callable[[QuadratureConfig], float],
                        cfg: QuadratureConfig = QuadratureConfig()) -> QuadratureResult:
    """
    Evaluates fn at cfg and at cfg with twice the panels. The doubled value is returned and the
    difference is the error estimate.
    :param fn: a computation parameterised by its quadrature configuration
    :type fn: Callable[[QuadratureConfig], float]
    :rtype: QuadratureResult
    """
    coarse = fn(cfg)
    fine = fn(cfg.doubled())
    error = abs(fine - coarse)
    converged = error <= max(cfg.rel_tol * abs(fine), 1e-300)
    if not converged:
        logging.getLogger(LOGGER_NAME).debug(f"Quadrature error estimate {error:.3e} exceeds rel_tol={cfg.rel_tol} for value {fine:.17g}")

    return QuadratureResult(value=fine, error=error, converged=converged)
