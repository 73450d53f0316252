import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from frac_gauss_markov.FracGMError import DomainError, ParameterError

TimeFunction = Callable[[Union[float, np.ndarray]], Union[float, np.ndarray]]


@dataclass(frozen=True, eq=False)
class GaussMarkovSpec:
    """
    A continuous Gauss-Markov process with mean, written as Y(t) = m(t) + h2(t)B(r(t)).
    The covariance factorises as c(s, t) = h1(s)h2(t) for s <= t.
    Every function must accept a float or a numpy array of times.
    Times are valid on [0, t_max]; evaluating outside raises a DomainError.
    """
    name: str
    m: TimeFunction
    h1: TimeFunction
    h2: TimeFunction
    r: TimeFunction
    r0: float
    params: dict[str, float] = field(default_factory=dict)
    t_max: float = math.inf

    def __post_init__(self):
        if not math.isfinite(self.r0) or self.r0 < 0:
            raise ParameterError(f"r0 must be a nonnegative real, instead got {self.r0}")
        if not self.t_max > 0:
            raise ParameterError(f"t_max must be positive, instead got {self.t_max}")

    def _check_times(self, *times: float):
        for t in times:
            if t < 0:
                raise DomainError(f"Times must be nonnegative, instead got {t}")
            if t > self.t_max:
                raise DomainError(f"Time {t} lies beyond the time domain bound t_max={self.t_max}")

    def c(self, s: float, t: float) -> float:
        """
        Covariance c(s, t) = h1(min(s, t)) * h2(max(s, t))
        """
        self._check_times(s, t)
        lo, hi = (s, t) if s <= t else (t, s)
        return float(self.h1(lo) * self.h2(hi))

    def mean(self, t: float) -> float:
        self._check_times(t)
        return float(self.m(t))

    def variance(self, t: float) -> float:
        self._check_times(t)
        return float(self.h1(t) * self.h2(t))

    def cov_matrix(self, times: np.ndarray) -> np.ndarray:
        times = np.asarray(times, dtype=float)
        self._check_times(*times)
        lo = np.minimum.outer(times, times)
        hi = np.maximum.outer(times, times)
        return self.h1(lo) * self.h2(hi)

    def validate_on(self, times: np.ndarray):
        """
        Checks the representation constraints on a sample of times:
        h2 has no zero, r is nondecreasing and starts at r0, and the diagonal h1*h2 is nonnegative.
        :param times: sample of nonnegative times, in increasing order
        :type times: np.ndarray
        :raises ParameterError: if any constraint fails on the sample
        """
        times = np.asarray(times, dtype=float)
        self._check_times(*times)
        if np.any(self.h2(times) == 0):
            raise ParameterError(f"h2 vanishes on the sample for process {self.name}")
        r_values = np.asarray(self.r(times), dtype=float)
        if np.any(np.diff(r_values) < 0):
            raise ParameterError(f"r is not nondecreasing for process {self.name}")
        if not math.isclose(float(self.r(0.0)), self.r0, rel_tol=1e-12, abs_tol=1e-300):
            raise ParameterError(f"r(0) differs from r0={self.r0} for process {self.name}")
        if np.any(self.h1(times) * self.h2(times) < 0):
            raise ParameterError(f"Negative variance h1*h2 for process {self.name}")
