import math

from frac_gauss_markov.frac_cov.arguments import check_time, ordered_times
from frac_gauss_markov.gm_core import OUParams, SOUParams

"""
Integer-order (alpha = 1) closed forms. These anchor the fractional engines at their upper endpoint.
Differences of exponentials are written with expm1 so that small mu*t keeps its precision.
"""


def ibm_cov(u: float, t: float) -> float:
    u, t = ordered_times(u, t)
    return u ** 2 * (t / 2 - u / 6)


def ibm_var(t: float) -> float:
    t = check_time(t)
    return t ** 3 / 3


def iou_mean(p: OUParams, t: float) -> float:
    t = check_time(t)
    return p.beta * t - (p.y - p.beta) * math.expm1(-p.mu * t) / p.mu


def iou_var(p: OUParams, t: float) -> float:
    t = check_time(t)
    mu = p.mu
    bracket = -math.expm1(-2 * mu * t) + 4 * math.expm1(-mu * t) + 2 * mu * t
    return p.sigma ** 2 / (2 * mu ** 3) * bracket


def iou_cov(p: OUParams, u: float, t: float) -> float:
    u, t = ordered_times(u, t)
    mu = p.mu
    bracket = (2 * mu * u + 2 * math.expm1(-mu * u) - math.expm1(-mu * (t - u))
               - math.expm1(-mu * (t + u)) + 2 * math.expm1(-mu * t))
    return p.sigma ** 2 / (2 * mu ** 3) * bracket


def isou_var(p: SOUParams, t: float) -> float:
    t = check_time(t)
    mu = p.mu
    return p.sigma ** 2 / mu ** 3 * (mu * t + math.expm1(-mu * t))


def isou_cov(p: SOUParams, s: float, t: float) -> float:
    s, t = ordered_times(s, t)
    mu = p.mu
    bracket = 2 * mu * s + math.expm1(-mu * s) + math.expm1(-mu * t) - math.expm1(-mu * (t - s))
    return p.sigma ** 2 / (2 * mu ** 3) * bracket
