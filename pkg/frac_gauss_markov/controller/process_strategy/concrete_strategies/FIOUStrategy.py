from frac_gauss_markov.controller.process_strategy.ProcessStrategy import ProcessStrategy
from frac_gauss_markov.frac_cov import fiou_var, fiou_cov, fiou_mean
from frac_gauss_markov.simulate import PathEnsemble, TimeGrid, simulate_ou


class FIOUStrategy(ProcessStrategy):
    name = 'fiou'

    def variance(self, t: float, alpha: float) -> float:
        return fiou_var(self.settings.ou_params(), t, alpha, self.settings.quadrature)

    def covariance(self, u: float, t: float, alpha: float) -> float:
        return fiou_cov(self.settings.ou_params(), u, t, alpha, self.settings.quadrature)

    def mean(self, t: float, alpha: float) -> float:
        return fiou_mean(self.settings.ou_params(), t, alpha, self.settings.quadrature)

    def simulate_underlying(self, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
        return simulate_ou(self.settings.ou_params(), grid, n_paths, seed)

    def metadata(self) -> dict:
        return {**super().metadata(), **self.settings.ou_params().to_metadata()}
