from dataclasses import dataclass
from typing import Optional

import numpy as np

from frac_gauss_markov.FracGMError import NumericError
from frac_gauss_markov.simulate.TimeGrid import TimeGrid


@dataclass(frozen=True, eq=False)
class CovMatrix:
    """
    Symmetric covariance matrix on a time grid, with a descriptor of the process and order that produced it.
    """
    SYMMETRY_TOL = 1e-12

    entries: np.ndarray
    source: str = ''
    grid: Optional[TimeGrid] = None

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise NumericError(f"Covariance matrix must be square, instead got shape {entries.shape}")
        if self.grid is not None and len(self.grid) != entries.shape[0]:
            raise NumericError(f"Matrix dimension {entries.shape[0]} does not match grid size {len(self.grid)}")
        scale = max(float(np.max(np.abs(entries))), 1.0) if entries.size else 1.0
        if np.any(np.abs(entries - entries.T) > CovMatrix.SYMMETRY_TOL * scale):
            raise NumericError("Covariance matrix is not symmetric")
        if np.any(np.diag(entries) < -CovMatrix.SYMMETRY_TOL * scale):
            raise NumericError("Covariance matrix has a negative diagonal entry")
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class CholeskyFactor:
    """
    Lower-triangular L with L L^T = C + jitter * max(diag C) * I
    """
    lower: np.ndarray
    jitter: float = 0.0
    source: str = ''
    grid: Optional[TimeGrid] = None

    @property
    def n(self) -> int:
        return self.lower.shape[0]
