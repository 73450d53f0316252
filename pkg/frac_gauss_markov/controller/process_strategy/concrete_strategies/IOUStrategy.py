from typing import Optional

from frac_gauss_markov.controller.process_strategy.ProcessStrategy import ProcessStrategy
from frac_gauss_markov.frac_cov import iou_var, iou_cov, iou_mean
from frac_gauss_markov.quadrature import FracOrder
from frac_gauss_markov.simulate import PathEnsemble, TimeGrid, simulate_ou


class IOUStrategy(ProcessStrategy):
    name = 'iou'
    fractional = False

    def variance(self, t: float, alpha: float) -> float:
        return iou_var(self.settings.ou_params(), t)

    def covariance(self, u: float, t: float, alpha: float) -> float:
        return iou_cov(self.settings.ou_params(), u, t)

    def mean(self, t: float, alpha: float) -> float:
        return iou_mean(self.settings.ou_params(), t)

    def simulate_underlying(self, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
        return simulate_ou(self.settings.ou_params(), grid, n_paths, seed)

    def integration_order(self, alpha: float) -> Optional[FracOrder]:
        return FracOrder(1.0)

    def metadata(self) -> dict:
        return {**super().metadata(), **self.settings.ou_params().to_metadata()}
