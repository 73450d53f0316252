from frac_gauss_markov.controller.process_strategy.ProcessStrategy import ProcessStrategy
from frac_gauss_markov.frac_cov import fisou_var, fisou_cov
from frac_gauss_markov.simulate import PathEnsemble, TimeGrid, simulate_sou


class FISOUStrategy(ProcessStrategy):
    name = 'fisou'

    def variance(self, t: float, alpha: float) -> float:
        return fisou_var(self.settings.sou_params(), t, alpha, self.settings.quadrature, self.settings.cross_term)

    def covariance(self, u: float, t: float, alpha: float) -> float:
        return fisou_cov(self.settings.sou_params(), u, t, alpha, self.settings.quadrature, self.settings.cross_term)

    def mean(self, t: float, alpha: float) -> float:
        return 0.0

    def simulate_underlying(self, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
        return simulate_sou(self.settings.sou_params(), grid, n_paths, seed)

    def metadata(self) -> dict:
        return {**super().metadata(), **self.settings.sou_params().to_metadata(),
                'cross_term': self.settings.cross_term.value}
