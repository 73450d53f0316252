from typing import Optional

from frac_gauss_markov.controller.process_strategy.ProcessStrategy import ProcessStrategy
from frac_gauss_markov.gm_core import sou_spec, kernel, sou_var
from frac_gauss_markov.quadrature import FracOrder
from frac_gauss_markov.simulate import PathEnsemble, TimeGrid, simulate_sou


class SOUStrategy(ProcessStrategy):
    name = 'sou'
    fractional = False

    def variance(self, t: float, alpha: float) -> float:
        return sou_var(self.settings.sou_params())

    def covariance(self, u: float, t: float, alpha: float) -> float:
        return kernel(sou_spec(self.settings.sou_params()), u, t)

    def mean(self, t: float, alpha: float) -> float:
        return 0.0

    def simulate_underlying(self, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
        return simulate_sou(self.settings.sou_params(), grid, n_paths, seed)

    def integration_order(self, alpha: float) -> Optional[FracOrder]:
        return None

    def metadata(self) -> dict:
        return {**super().metadata(), **self.settings.sou_params().to_metadata()}
