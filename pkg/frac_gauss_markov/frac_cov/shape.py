from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

from frac_gauss_markov.FracGMError import NumericError, ParameterError


def variance_crossing_time(var_fn: Callable[[float, float], float], alpha1: float, alpha2: float,
                           t_lo: float, t_hi: float, xtol: float = 1e-6) -> float:
    """
    Finds the time at which the variance curves of two fractional orders cross.
    :param var_fn: variance as a function of (t, alpha)
    :param alpha1: first order
    :param alpha2: second order
    :param t_lo: lower end of the bracket
    :param t_hi: upper end of the bracket
    :return: the root of var_fn(t, alpha1) - var_fn(t, alpha2) in [t_lo, t_hi]
    :raises NumericError: if the difference does not change sign on the bracket
    """
    if not 0 < t_lo < t_hi:
        raise ParameterError(f"Expected 0 < t_lo < t_hi, instead got t_lo={t_lo}, t_hi={t_hi}")
    difference = lambda t: var_fn(t, alpha1) - var_fn(t, alpha2)
    d_lo, d_hi = difference(t_lo), difference(t_hi)
    if np.sign(d_lo) == np.sign(d_hi):
        raise NumericError(f"Variance curves for alpha={alpha1} and alpha={alpha2} do not cross on [{t_lo}, {t_hi}]")

    return float(brentq(difference, t_lo, t_hi, xtol=xtol))


def count_local_maxima(values: Sequence[float]) -> int:
    """
    Counts local maxima of a sampled curve, endpoints included. Plateaus count once.
    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return 0
    if values.size == 1:
        return 1
    diffs = np.diff(values)
    signs = np.sign(diffs[diffs != 0])
    if signs.size == 0:
        return 1
    maxima = int(np.sum((signs[:-1] > 0) & (signs[1:] < 0)))
    if signs[0] < 0:
        maxima += 1
    if signs[-1] > 0:
        maxima += 1
    return maxima


def is_unimodal(values: Sequence[float]) -> bool:
    """
    A sampled curve is unimodal when its discrete differences change sign from + to - at most once
    and never from - to +.
    """
    values = np.asarray(values, dtype=float)
    diffs = np.diff(values)
    signs = np.sign(diffs[diffs != 0])
    changes = signs[1:] != signs[:-1]
    if np.any(changes & (signs[:-1] < 0)):
        return False
    return int(np.sum(changes)) <= 1
