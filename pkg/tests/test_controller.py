import logging
import math
import os
import sys
import tempfile
import unittest
from dataclasses import replace

import numpy as np
from pandas import DataFrame

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
from frac_gauss_markov.FracGMError import (DomainError, NotPositiveDefiniteError, ParameterError, ResolutionError,
                                           UnsupportedSpecError, ValidationFailure)
from frac_gauss_markov.controller import Controller, EXIT_SUCCESS, EXIT_USAGE, EXIT_NUMERIC, EXIT_VALIDATION
from frac_gauss_markov.controller.Controller import time_range
from frac_gauss_markov.controller.ExportService import ExportService
from frac_gauss_markov.controller.data_objects import ProcessSettings
from frac_gauss_markov.controller.process_strategy import ProcessFactory, ValidProcess
from frac_gauss_markov.controller.validation_suite import DEFAULT_N_PATHS, SuiteFactory, ValidSuite
from frac_gauss_markov.frac_cov import CrossTerm
from frac_gauss_markov.quadrature import FracOrder, QuadratureConfig


class TestExportService(unittest.TestCase):
    def setUp(self):
        self.export_service = ExportService()

    def test_filetypes(self):
        self.assertEqual(self.export_service.get_filetypes(), ['csv'])
        with self.assertRaises(ValueError):
            self.export_service.export(DataFrame(), {}, 'xlsx')

    def test_preamble_and_precision(self):
        df = DataFrame({'t': [0.1, 1.0], 'var': [1 / 3, 2.0]})
        text = self.export_service.export(df, {'command': 'var-curve', 'alphas': [0.5, 1.0], 'seed': 4}).getvalue()
        lines = text.splitlines()
        self.assertEqual(lines[:3], ['#command,var-curve', '#alphas,0.5 1', '#seed,4'])
        self.assertEqual(lines[3], 't,var')
        self.assertEqual(lines[4], '0.10000000000000001,0.33333333333333331')

    def test_named_index_is_written(self):
        df = DataFrame(np.eye(2), index=['1', '2'], columns=['1', '2'])
        df.index.name = 'u'
        text = self.export_service.export(df, {}).getvalue()
        self.assertTrue(text.startswith('u,1,2\n'))

    def test_chunked_export(self):
        df = DataFrame({'x': np.arange(2500, dtype=float)})
        lines = self.export_service.export(df, {}).getvalue().splitlines()
        self.assertEqual(len(lines), 2501)
        self.assertEqual(lines[-1], '2499')


class TestController(unittest.TestCase):
    def setUp(self):
        self.errors: list[str] = []
        self.controller = Controller(error_callback=self.errors.append)

    def test_execute_success(self):
        self.assertEqual(self.controller.execute('noop', lambda: 5), (5, EXIT_SUCCESS))
        self.assertEqual(self.errors, [])

    def test_execute_exit_codes(self):
        cases = [(ParameterError("p"), EXIT_USAGE), (DomainError("d"), EXIT_USAGE),
                 (UnsupportedSpecError("u"), EXIT_USAGE), (NotPositiveDefiniteError("n"), EXIT_NUMERIC),
                 (ResolutionError("r"), EXIT_NUMERIC), (ValidationFailure("v"), EXIT_VALIDATION),
                 (RuntimeError("boom"), EXIT_NUMERIC)]
        for error, code in cases:
            def fail():
                raise error
            result, exit_code = self.controller.execute('failing', fail)
            self.assertIsNone(result)
            self.assertEqual(exit_code, code, type(error).__name__)
        self.assertEqual(len(self.errors), len(cases))
        self.assertIn("boom", self.errors[-1])

    def test_log_file(self):
        previous_location = Controller.LOG_FILE_LOCATION
        with tempfile.TemporaryDirectory() as directory:
            try:
                Controller(run_logger=True, log_file=os.path.join(directory, 'run.log'))
                Controller.log("Covariance grid evaluated", logging.INFO)
                self.assertIn("Covariance grid evaluated", Controller.get_log_history())
            finally:
                Controller.setup_logger(Controller.LOGGER_NAME, False)
                Controller.LOG_FILE_LOCATION = previous_location

    def test_log_history_tail(self):
        previous_location = Controller.LOG_FILE_LOCATION
        with tempfile.TemporaryDirectory() as directory:
            try:
                Controller(run_logger=True, log_file=os.path.join(directory, 'run.log'))
                for i in range(5):
                    Controller.log(f"Grid row {i}", logging.INFO)
                tail = Controller.get_log_history(tail=2).splitlines()
                self.assertEqual(len(tail), 2)
                self.assertTrue(tail[0].endswith("Grid row 3"))
                self.assertTrue(tail[1].endswith("Grid row 4"))
                self.assertEqual(Controller.get_log_history(tail=0), '')
            finally:
                Controller.setup_logger(Controller.LOGGER_NAME, False)
                Controller.LOG_FILE_LOCATION = previous_location

    def test_var_curve_metadata(self):
        df, metadata = self.controller.var_curve('fibm', ProcessSettings(), alphas=[0.5], t_start=0.0, t_end=1.0,
                                                 t_step=0.5)
        self.assertEqual(list(df.columns), ['t', 'alpha=0.5'])
        self.assertEqual(df['alpha=0.5'].iloc[0], 0.0)
        self.assertEqual(metadata['quadrature_nodes_per_panel'], 32)
        self.assertEqual(metadata['quadrature_max_error'], 0.0)
        self.assertEqual(metadata['quadrature_panels'], 16)
        self.assertTrue(metadata['error_estimate'])
        self.assertEqual(metadata['t_step'], 0.5)
        self.assertFalse(metadata['mean'])

    def test_var_curve_metadata_reproduces_values(self):
        settings = ProcessSettings()
        estimated, metadata = self.controller.var_curve('fiou', settings, alphas=[0.3], t_start=0.5, t_end=2.0,
                                                        t_step=0.5)
        rerun_settings = replace(settings, quadrature=replace(settings.quadrature,
                                                              panels=metadata['quadrature_panels']))
        rerun, rerun_metadata = self.controller.var_curve('fiou', rerun_settings, alphas=[0.3], t_start=0.5,
                                                          t_end=2.0, t_step=metadata['t_step'], error_estimate=False)
        self.assertTrue(estimated.equals(rerun))
        self.assertEqual(rerun_metadata['quadrature_panels'], metadata['quadrature_panels'])
        self.assertFalse(rerun_metadata['error_estimate'])

    def test_var_curve_mean_columns(self):
        df, metadata = self.controller.var_curve('fiou', ProcessSettings(y=1.0), alphas=[1.0, 0.5], t_start=0.0,
                                                 t_end=2.0, t_step=0.5, with_mean=True)
        self.assertEqual(list(df.columns), ['t', 'alpha=1', 'mean alpha=1', 'alpha=0.5', 'mean alpha=0.5'])
        for t, mean in zip(df['t'], df['mean alpha=1']):
            self.assertAlmostEqual(mean, -math.expm1(-t), places=12)
        self.assertEqual(df['mean alpha=0.5'].iloc[0], 0.0)
        self.assertTrue((df['mean alpha=0.5'].iloc[1:] > 0).all())
        self.assertTrue(metadata['mean'])

    def test_var_curve_mean_of_centred_processes(self):
        df, _ = self.controller.var_curve('fibm', ProcessSettings(), alphas=[0.5], t_start=0.0, t_end=1.0,
                                          t_step=0.5, with_mean=True)
        self.assertTrue((df['mean alpha=0.5'] == 0.0).all())
        df, _ = self.controller.var_curve('ou', ProcessSettings(y=2.0), t_start=0.0, t_end=1.0, t_step=0.5,
                                          with_mean=True)
        self.assertEqual(list(df.columns), ['t', 'var', 'mean'])
        self.assertAlmostEqual(df['mean'].iloc[-1], 2.0 * math.exp(-1.0), places=14)

    def test_cov_table_error_estimate(self):
        _, metadata = self.controller.cov_table('fiou', ProcessSettings(), alpha=0.5, u=1.0, t_start=1.0, t_end=2.0,
                                                t_step=0.5)
        self.assertLess(metadata['quadrature_max_error'], 1e-6)
        self.assertEqual(metadata['quadrature_panels'], 16)
        self.assertTrue(metadata['error_estimate'])
        self.assertEqual(metadata['t_step'], 0.5)

    def test_cov_table_metadata_without_error_estimate(self):
        _, metadata = self.controller.cov_table('fibm', ProcessSettings(), alpha=0.5, u=1.0, error_estimate=False)
        self.assertEqual(metadata['quadrature_panels'], 8)
        self.assertFalse(metadata['error_estimate'])
        self.assertEqual(metadata['t_step'], 0.05)

    def test_simulate_metadata(self):
        _, metadata = self.controller.simulate('fibm', ProcessSettings(), alphas=[0.5], t_end=0.3, h=0.1, n_paths=2)
        self.assertEqual(metadata['t_step'], 0.1)
        self.assertEqual(metadata['quadrature_panels'], 8)
        self.assertFalse(metadata['error_estimate'])

    def test_simulate_rejects_unknown_method(self):
        with self.assertRaises(ParameterError):
            self.controller.simulate('fibm', ProcessSettings(), alphas=[0.5], t_end=0.2, h=0.1, n_paths=1,
                                     method='euler')

    def test_simulate_non_fractional(self):
        df, metadata = self.controller.simulate('ou', ProcessSettings(y=1.0), t_end=0.3, h=0.1, n_paths=2,
                                                method='pathwise')
        self.assertEqual(len(df), 2)
        self.assertTrue((df['0'] == 1.0).all())
        self.assertEqual(metadata['alphas'], 'n/a')

    def test_time_range(self):
        np.testing.assert_allclose(time_range(1.0, 2.0, 0.25), [1.0, 1.25, 1.5, 1.75, 2.0])
        for start, end, step in ((2.0, 1.0, 0.1), (0.0, 1.0, 0.0), (-1.0, 1.0, 0.5)):
            with self.assertRaises(ParameterError):
                time_range(start, end, step)


class TestProcessFactory(unittest.TestCase):
    def test_every_process(self):
        for process in ValidProcess:
            strategy = ProcessFactory.get_strategy(process.value, ProcessSettings())
            self.assertEqual(strategy.name, process.value)
            self.assertGreaterEqual(strategy.variance(1.0, 0.5), 0.0)

    def test_case_insensitive(self):
        self.assertEqual(ProcessFactory.get_strategy('FIBM', ProcessSettings()).name, 'fibm')

    def test_invalid(self):
        with self.assertRaises(ParameterError):
            ProcessFactory.get_strategy('fbm', ProcessSettings())

    def test_integration_orders(self):
        settings = ProcessSettings()
        self.assertEqual(ProcessFactory.get_strategy('fiou', settings).integration_order(0.3), FracOrder(0.3))
        self.assertEqual(ProcessFactory.get_strategy('iou', settings).integration_order(0.3), FracOrder(1.0))
        self.assertIsNone(ProcessFactory.get_strategy('sou', settings).integration_order(0.3))

    def test_cross_term_setting(self):
        printed = ProcessFactory.get_strategy('fisou', ProcessSettings(cross_term=CrossTerm.PRINTED))
        self.assertEqual(printed.metadata()['cross_term'], CrossTerm.PRINTED.value)
        default = ProcessFactory.get_strategy('fisou', ProcessSettings())
        self.assertEqual(default.metadata()['cross_term'], CrossTerm.INDEPENDENT.value)


class TestSuites(unittest.TestCase):
    def test_invalid_suite(self):
        with self.assertRaises(ParameterError):
            SuiteFactory.get_suite('speed', 0, 10, QuadratureConfig())

    def test_every_suite_is_mapped(self):
        for suite in ValidSuite:
            self.assertEqual(SuiteFactory.get_suite(suite.value, 0, 10, QuadratureConfig()).name, suite.value)

    def test_crossing_suite_passes(self):
        results = SuiteFactory.get_suite('crossing', 0, 10, QuadratureConfig()).run()
        self.assertTrue(all(result.passed for result in results), [r.check for r in results if not r.passed])

    def test_limits_suite_passes(self):
        report, _, passed = Controller().validate('limits')
        self.assertTrue(passed, list(report.loc[~report['passed'], 'check']))
        checks = list(report['check'])
        self.assertIn("J diagonal alpha=0.1", checks)
        self.assertIn("FIBM var approaches t as alpha decreases", checks)

    def test_monte_carlo_suite_default_paths(self):
        self.assertEqual(DEFAULT_N_PATHS, 10_000)
        report, metadata, passed = Controller().validate('mc')
        self.assertEqual(metadata['n_paths'], 10_000)
        self.assertTrue(passed, list(report.loc[~report['passed'], 'check']))

    def test_neuro_suite_is_deterministic(self):
        controller = Controller()
        first, _, _ = controller.validate('neuro', seed=5, n_paths=300)
        second, _, _ = controller.validate('neuro', seed=5, n_paths=300)
        self.assertTrue(first.equals(second))


if __name__ == '__main__':
    unittest.main()
