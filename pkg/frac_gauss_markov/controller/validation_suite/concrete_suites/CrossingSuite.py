import numpy as np

from frac_gauss_markov.controller.data_objects import CheckResult
from frac_gauss_markov.controller.validation_suite.ValidationSuite import ValidationSuite
from frac_gauss_markov.frac_cov import fibm_cov, fibm_var, fiou_var, variance_crossing_time, count_local_maxima
from frac_gauss_markov.gm_core import OUParams


class CrossingSuite(ValidationSuite):
    """
    Shape properties of the variance and covariance curves: the crossing zone of variance curves for two
    orders, unimodality of the covariance in alpha and monotonicity in t
    """
    name = 'crossing'

    def run(self) -> list[CheckResult]:
        cfg = self.cfg
        unit_ou = OUParams(mu=1.0, sigma=1.0)

        fibm_cross = variance_crossing_time(lambda t, a: fibm_var(t, a), 0.2, 0.8, 1.0, 3.0)
        self._within("FIBM variance crossing (0.2, 0.8)", fibm_cross, 1.6, 1.9)
        self._holds("FIBM variance order at t=1.5", fibm_var(1.5, 0.2) > fibm_var(1.5, 0.8), "var(0.2) > var(0.8)")
        self._holds("FIBM variance order at t=2", fibm_var(2.0, 0.2) < fibm_var(2.0, 0.8), "var(0.2) < var(0.8)")

        fiou_cross = variance_crossing_time(lambda t, a: fiou_var(unit_ou, t, a, cfg), 0.2, 0.8, 1.0, 3.0, xtol=1e-4)
        self._within("FIOU variance crossing (0.2, 0.8)", fiou_cross, 1.5, 2.0)

        alphas = np.round(np.arange(0.05, 0.951, 0.05), 2)
        covariances = [fibm_cov(1.0, 5.0, a, cfg) for a in alphas]
        self._holds("FIBM cov(1, 5) unimodal in alpha", count_local_maxima(covariances) == 1, "one local maximum")
        interior = [fibm_cov(1.0, 2.0, a, cfg) for a in alphas]
        peak = int(np.argmax(interior))
        self._holds("FIBM cov(1, 2) interior maximum in alpha", 0 < peak < len(alphas) - 1, "argmax not at an endpoint")

        times = np.round(np.arange(1.0, 5.0001, 0.05), 2)
        slice_values = np.array([fibm_cov(1.0, t, 0.5, cfg) for t in times])
        self._holds("FIBM cov(1, t) nondecreasing", bool(np.all(np.diff(slice_values) >= 0)), "nondecreasing on [1, 5]")

        return self.results
