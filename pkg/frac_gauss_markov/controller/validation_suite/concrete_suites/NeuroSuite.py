from frac_gauss_markov.controller.data_objects import CheckResult
from frac_gauss_markov.controller.validation_suite.ValidationSuite import ValidationSuite
from frac_gauss_markov.controller.validation_suite.concrete_suites.MonteCarloSuite import DISCRETIZATION_BOUND
from frac_gauss_markov.neuro import NeuronParams, STATIONARY, simulate_eta, simulate_voltage, voltage_mean, voltage_var
from frac_gauss_markov.simulate import TimeGrid, mc_mean_profile, mc_var_profile


class NeuroSuite(ValidationSuite):
    """
    Voltage moments of the fractional neuron with a stationary coloured-noise input against the analytic engines
    """
    name = 'neuro'

    def run(self) -> list[CheckResult]:
        params = NeuronParams(C_m=1.0, g_L=0.0, V_L=0.0, tau=1.0, varsigma=1.0, I0=0.0, eta0=STATIONARY)
        grid = TimeGrid.uniform_grid(2.0, 0.01)
        eta = simulate_eta(params, grid, self.n_paths, self.seed)
        for alpha in (0.5, 1.0):
            voltage = simulate_voltage(params, eta, alpha)
            mean, mean_error = mc_mean_profile(voltage)
            variance, var_error = mc_var_profile(voltage)
            for t in (0.5, 1.0, 2.0):
                i = grid.index_of(t)
                expected_mean = voltage_mean(params, t, alpha, self.cfg)
                self._bounded(f"voltage mean t={t} alpha={alpha}", mean[i], expected_mean, 3 * mean_error[i])
                expected_var = voltage_var(params, t, alpha, self.cfg)
                self._bounded(f"voltage var t={t} alpha={alpha}", variance[i], expected_var,
                              3 * var_error[i] + DISCRETIZATION_BOUND * expected_var)

        return self.results
