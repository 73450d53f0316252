import math
import os
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
from frac_gauss_markov.FracGMError import (DomainError, GridError, NotPositiveDefiniteError, NumericError,
                                           ParameterError, UnsupportedSpecError)
from frac_gauss_markov.frac_cov import fibm_cov, fibm_var, fiou_cov
from frac_gauss_markov.gm_core import OUParams, bm_spec, kernel
from frac_gauss_markov.simulate import (TimeGrid, CovMatrix, PathEnsemble, GENERATOR_ID, derive_seed, build_cov_matrix,
                                        cholesky_factor, sample_paths, mc_cov_estimate, mc_var_profile,
                                        mc_mean_profile, ks_normal_statistic, ks_critical_value,
                                        product_integration_weights, pathwise_rl_integral,
                                        pathwise_fractional_ensemble, simulate_bm, simulate_ou, simulate_ou_exact)

BM_KERNEL = lambda u, t: kernel(bm_spec(), u, t)
BM_MATRIX = np.array([[1, 1, 1], [1, 2, 2], [1, 2, 3]], dtype=float)


class TestTimeGrid(unittest.TestCase):
    def test_uniform_grid(self):
        grid = TimeGrid.uniform_grid(2.0, 0.01)
        self.assertEqual(len(grid), 201)
        self.assertTrue(grid.includes_origin)
        self.assertTrue(grid.uniform)
        self.assertAlmostEqual(grid.h, 0.01, places=14)
        self.assertEqual(len(TimeGrid.uniform_grid(2.0, 0.01, include_origin=False)), 200)

    def test_invalid_grids(self):
        for times in ([], [1.0, 1.0], [2.0, 1.0], [-1.0, 1.0], [1.0, math.inf]):
            with self.assertRaises(GridError):
                TimeGrid.from_times(times)

    def test_index_of(self):
        grid = TimeGrid.uniform_grid(2.0, 0.01)
        self.assertEqual(grid.index_of(1.0), 100)
        with self.assertRaises(GridError):
            grid.index_of(1.005)

    def test_origin(self):
        grid = TimeGrid.from_times([0.5, 1.0])
        self.assertFalse(grid.includes_origin)
        self.assertEqual(grid.with_origin(), TimeGrid.from_times([0.0, 0.5, 1.0]))
        self.assertEqual(grid.with_origin().without_origin(), grid)

    def test_nonuniform(self):
        grid = TimeGrid.from_times([0.0, 0.1, 0.3])
        self.assertFalse(grid.uniform)
        self.assertIsNone(grid.h)


class TestCovMatrix(unittest.TestCase):
    def test_bm_matrix(self):
        matrix = build_cov_matrix(BM_KERNEL, TimeGrid.from_times([1.0, 2.0, 3.0]), 'bm')
        np.testing.assert_array_equal(matrix.entries, BM_MATRIX)
        np.testing.assert_array_equal(matrix.entries, matrix.entries.T)

    def test_fibm_integer_order(self):
        matrix = build_cov_matrix(lambda u, t: fibm_cov(u, t, 1.0), TimeGrid.from_times([1.0, 2.0]))
        self.assertAlmostEqual(matrix.entries[0, 0], 1 / 3, places=14)
        self.assertAlmostEqual(matrix.entries[0, 1], 5 / 6, places=14)
        self.assertAlmostEqual(matrix.entries[1, 0], 5 / 6, places=14)

    def test_threads_do_not_change_entries(self):
        grid = TimeGrid.linspace(0.2, 2.0, 6)
        serial = build_cov_matrix(lambda u, t: fibm_cov(u, t, 0.5), grid, threads=1)
        parallel = build_cov_matrix(lambda u, t: fibm_cov(u, t, 0.5), grid, threads=4)
        np.testing.assert_array_equal(serial.entries, parallel.entries)

    def test_rejects_origin(self):
        with self.assertRaises(GridError):
            build_cov_matrix(BM_KERNEL, TimeGrid.from_times([0.0, 1.0]))

    def test_non_finite_entry(self):
        with self.assertRaises(NumericError) as context:
            build_cov_matrix(lambda u, t: math.nan if u != t else 1.0, TimeGrid.from_times([1.0, 2.0]))
        self.assertIn("(0, 1)", str(context.exception))

    def test_asymmetric(self):
        with self.assertRaises(NumericError):
            CovMatrix(np.array([[1.0, 0.5], [0.4, 1.0]]))


class TestCholesky(unittest.TestCase):
    def test_identity(self):
        factor = cholesky_factor(CovMatrix(np.eye(4)))
        np.testing.assert_array_equal(factor.lower, np.eye(4))
        self.assertEqual(factor.jitter, 0.0)

    def test_bm_kernel(self):
        factor = cholesky_factor(CovMatrix(BM_MATRIX))
        np.testing.assert_allclose(factor.lower @ factor.lower.T, BM_MATRIX, rtol=0, atol=1e-12)

    def test_jitter_on_singular_matrix(self):
        factor = cholesky_factor(CovMatrix(np.ones((3, 3))))
        self.assertGreater(factor.jitter, 0.0)
        reconstructed = factor.lower @ factor.lower.T
        error = np.linalg.norm(reconstructed - np.ones((3, 3))) / np.linalg.norm(np.ones((3, 3)))
        self.assertLess(error, 1e-7)

    def test_not_positive_definite(self):
        with self.assertRaises(NotPositiveDefiniteError):
            cholesky_factor(CovMatrix(np.array([[1.0, 2.0], [2.0, 1.0]])))

    def test_fiou_matrix(self):
        unit_ou = OUParams(mu=1.0, sigma=1.0)
        grid = TimeGrid.linspace(0.1, 5.0, 50)
        factor = cholesky_factor(build_cov_matrix(lambda u, t: fiou_cov(unit_ou, u, t, 0.5), grid, 'fiou'))
        self.assertLessEqual(factor.jitter, 1e-10)


class TestSamplePaths(unittest.TestCase):
    def test_deterministic(self):
        factor = cholesky_factor(CovMatrix(BM_MATRIX, grid=TimeGrid.from_times([1.0, 2.0, 3.0])))
        first = sample_paths(factor, 50, seed=7)
        second = sample_paths(factor, 50, seed=7)
        np.testing.assert_array_equal(first.values, second.values)
        self.assertEqual(first.generator_id, GENERATOR_ID)
        self.assertEqual(first.seed, 7)

    def test_order_independent(self):
        grid = TimeGrid.from_times([1.0, 2.0])
        small = sample_paths(np.eye(2), 10, seed=3, grid=grid)
        large = sample_paths(np.eye(2), 100, seed=3, grid=grid)
        np.testing.assert_array_equal(small.values, large.values[:10])

    def test_empty(self):
        ensemble = sample_paths(np.eye(2), 0, seed=1, grid=TimeGrid.from_times([1.0, 2.0]))
        self.assertEqual(ensemble.values.shape, (0, 2))

    def test_identity_moments(self):
        ensemble = sample_paths(np.eye(3), 100000, seed=11, grid=TimeGrid.from_times([1.0, 2.0, 3.0]))
        mean, _ = mc_mean_profile(ensemble)
        variance, _ = mc_var_profile(ensemble)
        self.assertTrue(np.all(np.abs(mean) < 0.02))
        self.assertTrue(np.all((variance > 0.97) & (variance < 1.03)))
        estimate, std_error = mc_cov_estimate(ensemble, 1, 1)
        self.assertLess(abs(estimate - 1), 3 * std_error)

    def test_bm_covariance(self):
        grid = TimeGrid.from_times([1.0, 2.0])
        factor = cholesky_factor(build_cov_matrix(BM_KERNEL, grid))
        estimate, _ = mc_cov_estimate(sample_paths(factor, 40000, seed=5), 0, 1)
        self.assertLess(abs(estimate - 1), 0.05)

    def test_grid_mismatch(self):
        with self.assertRaises(GridError):
            sample_paths(np.eye(3), 5, seed=1, grid=TimeGrid.from_times([1.0, 2.0]))

    def test_derive_seed(self):
        self.assertEqual(derive_seed(3, 1), derive_seed(3, 1))
        self.assertNotEqual(derive_seed(3, 0), derive_seed(3, 1))
        with self.assertRaises(ParameterError):
            derive_seed(-1, 0)


class TestMonteCarloEstimates(unittest.TestCase):
    def test_zero_paths(self):
        ensemble = PathEnsemble(np.zeros((5, 2)), TimeGrid.from_times([1.0, 2.0]), 0, GENERATOR_ID)
        self.assertEqual(mc_cov_estimate(ensemble, 0, 1), (0.0, 0.0))

    def test_index_out_of_range(self):
        ensemble = PathEnsemble(np.zeros((5, 2)), TimeGrid.from_times([1.0, 2.0]), 0, GENERATOR_ID)
        with self.assertRaises(DomainError):
            mc_cov_estimate(ensemble, 0, 2)

    def test_too_few_paths(self):
        ensemble = PathEnsemble(np.zeros((1, 2)), TimeGrid.from_times([1.0, 2.0]), 0, GENERATOR_ID)
        with self.assertRaises(ParameterError):
            mc_cov_estimate(ensemble, 0, 1)

    def test_ks_critical_value(self):
        # asymptotic 1% critical value 1.628/sqrt(n)
        self.assertAlmostEqual(ks_critical_value(10000), 1.628 / 100, places=3)


class TestPathwiseIntegral(unittest.TestCase):
    def setUp(self):
        self.grid = TimeGrid.uniform_grid(2.0, 0.01)

    def test_constant(self):
        for alpha in (0.1, 0.5, 1.0):
            integral = pathwise_rl_integral(np.ones(len(self.grid)), alpha, self.grid)
            expected = self.grid.times ** alpha / math.gamma(alpha + 1)
            np.testing.assert_allclose(integral, expected, rtol=1e-9, atol=1e-14)

    def test_linear(self):
        integral = pathwise_rl_integral(self.grid.times, 1.0, self.grid)
        np.testing.assert_allclose(integral, self.grid.times ** 2 / 2, rtol=0, atol=1e-12)
        integral = pathwise_rl_integral(self.grid.times, 0.5, self.grid)
        np.testing.assert_allclose(integral, self.grid.times ** 1.5 / math.gamma(2.5), rtol=1e-9, atol=1e-14)

    def test_weights_lower_triangular(self):
        weights = product_integration_weights(10, 0.1, 0.5)
        np.testing.assert_array_equal(weights, np.tril(weights))
        self.assertTrue(np.all(weights[0] == 0))

    def test_nonuniform_grid(self):
        grid = TimeGrid.from_times([0.0, 0.1, 0.3])
        with self.assertRaises(UnsupportedSpecError):
            pathwise_rl_integral(np.ones(3), 0.5, grid)

    def test_requires_origin(self):
        with self.assertRaises(GridError):
            pathwise_rl_integral(np.ones(3), 0.5, TimeGrid.from_times([0.1, 0.2, 0.3]))

    def test_fractional_ensemble_drops_origin(self):
        bm = simulate_bm(self.grid, 3, seed=0)
        integrated = pathwise_fractional_ensemble(bm, 0.5)
        self.assertEqual(integrated.grid, self.grid.without_origin())
        self.assertEqual(integrated.metadata['alpha'], 0.5)

    def test_fibm_variance(self):
        fibm = pathwise_rl_integral(simulate_bm(self.grid, 10000, seed=1), 0.5)
        variance, std_error = mc_var_profile(fibm)
        i = self.grid.index_of(2.0)
        self.assertLess(abs(variance[i] - 8 / math.pi), 3 * std_error[i] + 0.02 * 8 / math.pi)
        statistic, _ = ks_normal_statistic(fibm.values[:, i], fibm_var(2.0, 0.5))
        self.assertLess(statistic, ks_critical_value(10000, 0.01))

    def test_oracle_covariance(self):
        i, j = self.grid.index_of(1.0), self.grid.index_of(2.0)
        unit_ou = OUParams(mu=1.0, sigma=1.0)
        bm = simulate_bm(self.grid, 4000, seed=2)
        ou = simulate_ou(unit_ou, self.grid, 4000, seed=3)
        for alpha in (0.25, 0.5, 0.75, 1.0):
            estimate, std_error = mc_cov_estimate(pathwise_rl_integral(bm, alpha), i, j)
            expected = fibm_cov(1.0, 2.0, alpha)
            self.assertLess(abs(estimate - expected), 3 * std_error + 0.02 * expected, f"FIBM alpha={alpha}")
            estimate, std_error = mc_cov_estimate(pathwise_rl_integral(ou, alpha), i, j)
            expected = fiou_cov(unit_ou, 1.0, 2.0, alpha)
            self.assertLess(abs(estimate - expected), 3 * std_error + 0.02 * expected, f"FIOU alpha={alpha}")

    def test_cholesky_agrees_with_pathwise(self):
        chol_grid = TimeGrid.linspace(0.1, 2.0, 20)
        factor = cholesky_factor(build_cov_matrix(lambda u, t: fibm_cov(u, t, 0.5), chol_grid))
        chol_variance, chol_error = mc_var_profile(sample_paths(factor, 4000, seed=4))
        path_variance, path_error = mc_var_profile(pathwise_rl_integral(simulate_bm(self.grid, 4000, seed=5), 0.5))
        for t in (0.1, 2.0):
            j, k = chol_grid.index_of(t), self.grid.index_of(t)
            joint = math.sqrt(chol_error[j] ** 2 + path_error[k] ** 2)
            self.assertLess(abs(chol_variance[j] - path_variance[k]), 3 * joint + 0.02 * fibm_var(t, 0.5))


class TestUnderlyingSimulation(unittest.TestCase):
    def test_bm_starts_at_zero(self):
        bm = simulate_bm(TimeGrid.uniform_grid(1.0, 0.1), 5, seed=0)
        np.testing.assert_array_equal(bm.values[:, 0], np.zeros(5))

    def test_ou_noiseless_limit(self):
        grid = TimeGrid.uniform_grid(1.0, 0.1)
        values = simulate_ou_exact(2.0, 1e-12, 1.0, 3.0, grid, 2, seed=0)
        np.testing.assert_allclose(values[0], 1.0 + 2.0 * np.exp(-2.0 * grid.times), atol=1e-10)

    def test_ou_stationary_variance(self):
        grid = TimeGrid.uniform_grid(1.0, 0.1)
        values = simulate_ou_exact(1.0, 1.0, 0.0, None, grid, 20000, seed=9)
        variance = values.var(axis=0, ddof=1)
        # standard error of a sample variance of a Gaussian is var * sqrt(2/(n-1))
        bound = 3 * 0.5 * math.sqrt(2 / 19999)
        self.assertTrue(np.all(np.abs(variance - 0.5) < bound * 1.5))


if __name__ == '__main__':
    unittest.main()
