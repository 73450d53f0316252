from dataclasses import dataclass, field

import numpy as np
from pandas import DataFrame

from frac_gauss_markov.FracGMError import GridError
from frac_gauss_markov.simulate.TimeGrid import TimeGrid


@dataclass(frozen=True, eq=False)
class PathEnsemble:
    """
    n_paths sample paths on a common grid. Row i is path i.
    seed and generator_id identify the Gaussian stream so that the ensemble can be regenerated bit-exactly.
    metadata holds the process descriptor (process name, alpha, parameters).
    """
    values: np.ndarray
    grid: TimeGrid
    seed: int
    generator_id: str
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim == 1 and values.size == 0:
            values = values.reshape(0, len(self.grid))
        if values.ndim != 2 or values.shape[1] != len(self.grid):
            raise GridError(f"Path values of shape {values.shape} do not match a grid of {len(self.grid)} times")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @property
    def n_paths(self) -> int:
        return self.values.shape[0]

    def with_values(self, values: np.ndarray, **metadata) -> 'PathEnsemble':
        return PathEnsemble(values=values, grid=self.grid, seed=self.seed, generator_id=self.generator_id,
                            metadata={**self.metadata, **metadata})

    def with_origin(self) -> 'PathEnsemble':
        """
        Prepends the pinned value X(0) = 0 when the grid excludes the origin
        """
        if self.grid.includes_origin:
            return self
        values = np.hstack((np.zeros((self.n_paths, 1)), self.values))
        return PathEnsemble(values=values, grid=self.grid.with_origin(), seed=self.seed,
                            generator_id=self.generator_id, metadata=dict(self.metadata))

    def header_metadata(self) -> dict:
        return {
            'seed': self.seed,
            'generator_id': self.generator_id,
            **self.metadata,
            **self.grid.to_metadata(),
            'n_paths': self.n_paths
        }

    def to_frame(self) -> DataFrame:
        """
        One row per path; columns are the grid times.
        """
        columns = [f"{t:.17g}" for t in self.grid.times]
        df = DataFrame(self.values, columns=columns)
        df.index.name = 'path'
        return df
