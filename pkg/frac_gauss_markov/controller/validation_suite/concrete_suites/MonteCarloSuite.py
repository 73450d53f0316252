import math

from frac_gauss_markov.controller.data_objects import CheckResult
from frac_gauss_markov.controller.validation_suite.ValidationSuite import ValidationSuite
from frac_gauss_markov.frac_cov import fibm_cov, fibm_var, fiou_cov
from frac_gauss_markov.gm_core import OUParams
from frac_gauss_markov.simulate import (TimeGrid, build_cov_matrix, cholesky_factor, sample_paths, simulate_bm,
                                        simulate_ou, pathwise_rl_integral, mc_cov_estimate, mc_var_profile,
                                        ks_normal_statistic, ks_critical_value)

# Relative bias allowed for the piecewise-linear product integration at h = 0.01
DISCRETIZATION_BOUND: float = 0.02


class MonteCarloSuite(ValidationSuite):
    """
    Monte-Carlo agreement between the analytic covariances, the pathwise oracle and Cholesky sampling
    """
    name = 'mc'
    STEP: float = 0.01
    T_END: float = 2.0

    def _mc_check(self, check: str, estimate: float, std_error: float, expected: float):
        bound = 3 * std_error + DISCRETIZATION_BOUND * abs(expected)
        self._bounded(check, estimate, expected, bound)

    def run(self) -> list[CheckResult]:
        cfg = self.cfg
        grid = TimeGrid.uniform_grid(MonteCarloSuite.T_END, MonteCarloSuite.STEP)
        i1, i2 = grid.index_of(1.0), grid.index_of(2.0)
        unit_ou = OUParams(mu=1.0, sigma=1.0)

        bm = simulate_bm(grid, self.n_paths, self.seed)
        ou = simulate_ou(unit_ou, grid, self.n_paths, self.seed + 1)
        for alpha in (0.25, 0.5, 0.75, 1.0):
            fibm = pathwise_rl_integral(bm, alpha)
            estimate, std_error = mc_cov_estimate(fibm, i1, i2)
            self._mc_check(f"pathwise FIBM cov(1, 2) alpha={alpha}", estimate, std_error, fibm_cov(1.0, 2.0, alpha, cfg))
            fiou = pathwise_rl_integral(ou, alpha)
            estimate, std_error = mc_cov_estimate(fiou, i1, i2)
            self._mc_check(f"pathwise FIOU cov(1, 2) alpha={alpha}", estimate, std_error,
                           fiou_cov(unit_ou, 1.0, 2.0, alpha, cfg))

        fibm = pathwise_rl_integral(bm, 0.5)
        variance, std_error = mc_var_profile(fibm)
        self._mc_check("pathwise FIBM var t=2 alpha=0.5", variance[i2], std_error[i2], 8 / math.pi)

        statistic, _ = ks_normal_statistic(fibm.values[:, i2], fibm_var(2.0, 0.5))
        self._bounded("KS statistic FIBM t=2 alpha=0.5", statistic, 0.0, ks_critical_value(self.n_paths, 0.01))

        chol_grid = TimeGrid.linspace(0.1, MonteCarloSuite.T_END, 50)
        factor = cholesky_factor(build_cov_matrix(lambda u, t: fibm_cov(u, t, 0.5, cfg), chol_grid, 'fibm(alpha=0.5)'))
        chol = sample_paths(factor, self.n_paths, self.seed + 2)
        chol_variance, chol_error = mc_var_profile(chol)
        for t in (0.1, 2.0):
            j, k = chol_grid.index_of(t), grid.index_of(t)
            joint = math.sqrt(chol_error[j] ** 2 + std_error[k] ** 2)
            bound = 3 * joint + DISCRETIZATION_BOUND * fibm_var(t, 0.5)
            self._bounded(f"Cholesky vs pathwise var t={t}", chol_variance[j], variance[k], bound)

        return self.results
