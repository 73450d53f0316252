from abc import ABC, abstractmethod
from typing import Optional

from frac_gauss_markov.controller.data_objects import ProcessSettings
from frac_gauss_markov.frac_cov import accuracy_warnings
from frac_gauss_markov.quadrature import FracOrder
from frac_gauss_markov.simulate import PathEnsemble, TimeGrid


class ProcessStrategy(ABC):
    """
    An abstract class giving the commands a uniform view of one process: its variance, covariance and
    mean at a fractional order, and the underlying paths that the pathwise oracle integrates.
    A concrete class should extend this class for each process name accepted by the CLI.
    Non-fractional processes ignore alpha.
    """
    name: str = ''
    fractional: bool = True

    def __init__(self, settings: ProcessSettings):
        """
        :param settings: the process parameters and the quadrature configuration
        """
        self.settings: ProcessSettings = settings

    @abstractmethod
    def variance(self, t: float, alpha: float) -> float:
        raise NotImplementedError()

    @abstractmethod
    def covariance(self, u: float, t: float, alpha: float) -> float:
        raise NotImplementedError()

    @abstractmethod
    def mean(self, t: float, alpha: float) -> float:
        raise NotImplementedError()

    @abstractmethod
    def simulate_underlying(self, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
        """
        Simulates the process that is integrated pathwise.
        :param grid: grid starting at t=0
        :type grid: TimeGrid
        :param n_paths: number of paths
        :param seed: seed of the Gaussian substreams
        :return: underlying paths including the t=0 column
        :rtype: PathEnsemble
        """
        raise NotImplementedError()

    def integration_order(self, alpha: float) -> Optional[FracOrder]:
        """
        :return: the order the underlying paths are integrated with, or None when they are used as they are
        """
        return FracOrder.of(alpha)

    def warnings(self, alpha: float) -> list[str]:
        if not self.fractional:
            return []
        return accuracy_warnings(self.name, alpha)

    def metadata(self) -> dict:
        return {'process': self.name}

    def descriptor(self, alpha: Optional[float]) -> str:
        if not self.fractional or alpha is None:
            return self.name
        return f"{self.name}(alpha={alpha:g})"
