import math
import os
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
from frac_gauss_markov.FracGMError import DomainError, ParameterError
from frac_gauss_markov.gm_core import (OUParams, SOUParams, bm_spec, ou_spec, sou_spec, kernel, ou_mean, ou_var,
                                       sou_var, MIN_OU_RATE)


class TestProcessParams(unittest.TestCase):
    def test_ou_params_reject_nonpositive_rate(self):
        with self.assertRaises(ParameterError):
            OUParams(mu=0.0, sigma=1.0)
        with self.assertRaises(ParameterError):
            OUParams(mu=-1.0, sigma=1.0)

    def test_ou_params_reject_nonpositive_diffusion(self):
        with self.assertRaises(ParameterError):
            OUParams(mu=1.0, sigma=0.0)

    def test_ou_params_reject_non_finite(self):
        with self.assertRaises(ParameterError):
            OUParams(mu=1.0, sigma=1.0, beta=math.nan)
        with self.assertRaises(ParameterError):
            OUParams(mu=math.inf, sigma=1.0)

    def test_parameter_error_is_value_error(self):
        with self.assertRaises(ValueError):
            OUParams(mu=1.0, sigma=-2.0)

    def test_sou_params_accept_negative_diffusion(self):
        p = SOUParams(mu=2.0, sigma=-1.0)
        self.assertAlmostEqual(p.r0, 0.25)
        self.assertEqual(p.as_ou(), OUParams(mu=2.0, sigma=1.0, beta=0.0, y=0.0))

    def test_sou_params_reject_zero_diffusion(self):
        with self.assertRaises(ParameterError):
            SOUParams(mu=1.0, sigma=0.0)


class TestBrownianSpec(unittest.TestCase):
    def setUp(self):
        self.spec = bm_spec()

    def test_covariance_is_min(self):
        self.assertEqual(self.spec.c(1, 2), 1)
        self.assertEqual(self.spec.c(3, 3), 3)
        self.assertEqual(kernel(self.spec, 2, 5), 2)

    def test_deterministic_start(self):
        for t in (0.5, 1.0, 7.0):
            self.assertEqual(self.spec.c(0, t), 0)
        self.assertEqual(self.spec.r0, 0)

    def test_mean_is_zero(self):
        self.assertEqual(self.spec.mean(2.0), 0.0)

    def test_cov_matrix(self):
        expected = np.array([[1, 1, 1], [1, 2, 2], [1, 2, 3]], dtype=float)
        np.testing.assert_array_equal(self.spec.cov_matrix(np.array([1.0, 2.0, 3.0])), expected)

    def test_validate_on_grid(self):
        self.spec.validate_on(np.linspace(0, 5, 11))


class TestOUSpec(unittest.TestCase):
    def setUp(self):
        self.p = OUParams(mu=1.0, sigma=1.0)
        self.spec = ou_spec(self.p)

    def test_covariance_formula(self):
        for s, t in ((0.5, 1.0), (1.0, 2.0), (2.0, 2.5)):
            expected = 0.5 * (math.exp(-(t - s)) - math.exp(-(s + t)))
            self.assertAlmostEqual(self.spec.c(s, t), expected, places=14)

    def test_kernel_diagonal(self):
        self.assertAlmostEqual(kernel(self.spec, 1, 1), 0.5 * (1 - math.exp(-2)), places=14)
        self.assertAlmostEqual(kernel(self.spec, 1, 1), 0.43233, places=5)

    def test_starts_deterministically(self):
        self.assertEqual(self.spec.c(0.0, 3.0), 0.0)
        self.assertEqual(self.spec.r0, 0.0)

    def test_mean(self):
        p = OUParams(mu=2.0, sigma=1.0, beta=1.0, y=3.0)
        self.assertAlmostEqual(ou_spec(p).mean(0.5), 1.0 + 2.0 * math.exp(-1.0), places=14)
        self.assertAlmostEqual(ou_mean(p, 0.5), 1.0 + 2.0 * math.exp(-1.0), places=14)

    def test_variance_matches_kernel(self):
        for t in (0.1, 1.0, 4.0):
            self.assertAlmostEqual(ou_var(self.p, t), self.spec.variance(t), places=14)

    def test_brownian_limit_is_monotone(self):
        times = np.array([0.5, 1.0, 2.0])
        bm = bm_spec().cov_matrix(times)
        gaps = [np.max(np.abs(ou_spec(OUParams(mu=mu, sigma=1.0)).cov_matrix(times) - bm)) for mu in (1e-2, 1e-3)]
        self.assertLess(gaps[1], gaps[0])
        self.assertLess(gaps[1], 1e-2)

    def test_rejects_rate_below_minimum(self):
        with self.assertRaises(ParameterError):
            ou_spec(OUParams(mu=MIN_OU_RATE / 10, sigma=1.0))

    def test_validate_on_grid(self):
        self.spec.validate_on(np.linspace(0, 5, 11))


class TestSOUSpec(unittest.TestCase):
    def setUp(self):
        self.p = SOUParams(mu=1.0, sigma=1.0)
        self.spec = sou_spec(self.p)

    def test_stationary_variance(self):
        for t in (0.0, 1.0, 3.0):
            self.assertAlmostEqual(self.spec.c(t, t), 0.5, places=14)
        self.assertEqual(sou_var(self.p), 0.5)

    def test_covariance_value(self):
        self.assertAlmostEqual(self.spec.c(1, 2), 0.5 * math.exp(-1), places=14)
        self.assertAlmostEqual(self.spec.c(1, 2), 0.18394, places=5)

    def test_stationarity(self):
        for h in (0.3, 1.0, 2.5):
            self.assertAlmostEqual(self.spec.c(1.0 + h, 2.0 + h), self.spec.c(1.0, 2.0), places=12)

    def test_random_start(self):
        self.assertAlmostEqual(self.spec.r0, 0.5)
        self.assertAlmostEqual(self.spec.c(0.0, 0.0), 0.5)


class TestKernel(unittest.TestCase):
    def test_symmetry(self):
        specs = [bm_spec(), ou_spec(OUParams(mu=0.7, sigma=1.3)), sou_spec(SOUParams(mu=1.5, sigma=0.4))]
        times = np.linspace(0, 4, 9)
        for spec in specs:
            for s in times:
                for t in times:
                    self.assertEqual(kernel(spec, s, t), kernel(spec, t, s))

    def test_negative_time(self):
        with self.assertRaises(DomainError):
            kernel(bm_spec(), -1.0, 2.0)

    def test_time_domain_bound(self):
        spec = bm_spec(t_max=2.0)
        with self.assertRaises(DomainError):
            spec.c(1.0, 3.0)


if __name__ == '__main__':
    unittest.main()
