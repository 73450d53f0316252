from typing import Optional

from frac_gauss_markov.controller.process_strategy.ProcessStrategy import ProcessStrategy
from frac_gauss_markov.gm_core import ou_spec, kernel, ou_mean, ou_var
from frac_gauss_markov.quadrature import FracOrder
from frac_gauss_markov.simulate import PathEnsemble, TimeGrid, simulate_ou


class OUStrategy(ProcessStrategy):
    name = 'ou'
    fractional = False

    def variance(self, t: float, alpha: float) -> float:
        return ou_var(self.settings.ou_params(), t)

    def covariance(self, u: float, t: float, alpha: float) -> float:
        return kernel(ou_spec(self.settings.ou_params()), u, t)

    def mean(self, t: float, alpha: float) -> float:
        return ou_mean(self.settings.ou_params(), t)

    def simulate_underlying(self, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
        return simulate_ou(self.settings.ou_params(), grid, n_paths, seed)

    def integration_order(self, alpha: float) -> Optional[FracOrder]:
        return None

    def metadata(self) -> dict:
        return {**super().metadata(), **self.settings.ou_params().to_metadata()}
