import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from frac_gauss_markov.FracGMError import GridError


@dataclass(frozen=True, eq=False)
class TimeGrid:
    """
    Strictly increasing, finite evaluation times.
    Grids used for covariance matrices exclude t=0; grids used to simulate underlying paths start at t=0.
    uniform and h are derived from the times on construction.
    """
    UNIFORM_RTOL = 1e-9

    times: np.ndarray

    def __post_init__(self):
        times = np.array(self.times, dtype=float).ravel()
        if times.size == 0:
            raise GridError("A time grid needs at least one time")
        if not np.all(np.isfinite(times)):
            raise GridError("Grid times must be finite")
        if times[0] < 0:
            raise GridError(f"Grid times must be nonnegative, instead start at {times[0]}")
        if np.any(np.diff(times) <= 0):
            raise GridError("Grid times must be strictly increasing")
        times.setflags(write=False)
        object.__setattr__(self, 'times', times)

    def __len__(self) -> int:
        return self.times.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeGrid):
            return False
        return np.array_equal(self.times, other.times)

    def __hash__(self):
        return hash(self.times.tobytes())

    @property
    def includes_origin(self) -> bool:
        return self.times[0] == 0

    @property
    def uniform(self) -> bool:
        if self.times.size < 2:
            return True
        steps = np.diff(self.times)
        return bool(np.allclose(steps, steps[0], rtol=TimeGrid.UNIFORM_RTOL, atol=0))

    @property
    def h(self) -> Optional[float]:
        if self.times.size < 2 or not self.uniform:
            return None
        return float((self.times[-1] - self.times[0]) / (self.times.size - 1))

    def without_origin(self) -> 'TimeGrid':
        if not self.includes_origin:
            return self
        if self.times.size == 1:
            raise GridError("Removing the origin would leave an empty grid")
        return TimeGrid(self.times[1:])

    def with_origin(self) -> 'TimeGrid':
        if self.includes_origin:
            return self
        return TimeGrid(np.concatenate(([0.0], self.times)))

    def index_of(self, t: float) -> int:
        """
        :return: the index of the grid time closest to t
        :raises GridError: if no grid time is within a relative 1e-9 of t
        """
        index = int(np.argmin(np.abs(self.times - t)))
        if not math.isclose(self.times[index], t, rel_tol=1e-9, abs_tol=1e-12):
            raise GridError(f"Time {t} is not on the grid")
        return index

    @staticmethod
    def uniform_grid(t_end: float, h: float, include_origin: bool = True) -> 'TimeGrid':
        """
        Equi-spaced grid k*h for k = 0 (or 1) up to round(t_end/h).
        """
        if not (h > 0 and t_end > 0):
            raise GridError(f"Expected positive t_end and h, instead got t_end={t_end}, h={h}")
        n = int(round(t_end / h))
        if n < 1:
            raise GridError(f"Step h={h} is larger than t_end={t_end}")
        start = 0 if include_origin else 1
        return TimeGrid(h * np.arange(start, n + 1))

    @staticmethod
    def linspace(a: float, b: float, n: int) -> 'TimeGrid':
        if n < 1:
            raise GridError(f"A grid needs at least one point, instead got n={n}")
        return TimeGrid(np.linspace(a, b, n))

    @staticmethod
    def from_times(times) -> 'TimeGrid':
        return TimeGrid(np.asarray(times, dtype=float))

    def to_metadata(self) -> dict:
        return {
            'grid_start': float(self.times[0]),
            'grid_end': float(self.times[-1]),
            'grid_points': len(self),
            'grid_step': self.h if self.h is not None else 'nonuniform'
        }
