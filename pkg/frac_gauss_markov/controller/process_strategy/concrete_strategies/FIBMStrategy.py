from frac_gauss_markov.controller.process_strategy.ProcessStrategy import ProcessStrategy
from frac_gauss_markov.frac_cov import fibm_var, fibm_cov
from frac_gauss_markov.simulate import PathEnsemble, TimeGrid, simulate_bm


class FIBMStrategy(ProcessStrategy):
    name = 'fibm'

    def variance(self, t: float, alpha: float) -> float:
        return fibm_var(t, alpha)

    def covariance(self, u: float, t: float, alpha: float) -> float:
        return fibm_cov(u, t, alpha, self.settings.quadrature)

    def mean(self, t: float, alpha: float) -> float:
        return 0.0

    def simulate_underlying(self, grid: TimeGrid, n_paths: int, seed: int) -> PathEnsemble:
        return simulate_bm(grid, n_paths, seed)
