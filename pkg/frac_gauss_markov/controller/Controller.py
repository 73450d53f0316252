import logging
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from logging.handlers import RotatingFileHandler
from os.path import abspath, join, dirname
from typing import Callable, Optional, Sequence, TypeVar

import numpy as np
from pandas import DataFrame, concat
from tqdm import tqdm

from frac_gauss_markov import __version__
from frac_gauss_markov.FracGMError import (FracGMError, ParameterError, DomainError, GridError, UnsupportedSpecError,
                                           NumericError, ResolutionError, ValidationFailure)
from frac_gauss_markov.controller.ExportService import ExportService
from frac_gauss_markov.controller.data_objects import ProcessSettings
from frac_gauss_markov.controller.process_strategy import ProcessFactory, ProcessStrategy
from frac_gauss_markov.controller.validation_suite import DEFAULT_N_PATHS, SuiteFactory
from frac_gauss_markov.neuro import NeuronParams, simulate_eta, simulate_voltage, voltage_mean
from frac_gauss_markov.quadrature import QuadratureConfig, with_error_estimate
from frac_gauss_markov.simulate import (GENERATOR_ID, PathEnsemble, TimeGrid, build_cov_matrix, cholesky_factor,
                                        sample_paths, pathwise_rl_integral, derive_seed)

T = TypeVar('T')

EXIT_SUCCESS: int = 0
EXIT_USAGE: int = 2
EXIT_NUMERIC: int = 3
EXIT_VALIDATION: int = 4

# Default alpha lists and time ranges of the variance curves
PRESETS: dict[str, dict] = {
    'fibm': {'alphas': (0.2, 0.4, 0.6, 0.8, 1.0), 't_start': 0.0, 't_end': 3.5, 't_step': 0.05},
    'fiou': {'alphas': (0.1, 0.3, 0.5, 0.7, 0.9, 1.0), 't_start': 0.0, 't_end': 8.0, 't_step': 0.1},
    'fisou': {'alphas': (0.1, 0.3, 0.5, 0.7, 0.9, 1.0), 't_start': 0.0, 't_end': 8.0, 't_step': 0.1}
}
DEFAULT_PRESET: dict = {'alphas': (1.0,), 't_start': 0.0, 't_end': 8.0, 't_step': 0.1}
COV_TABLE_PRESET: dict = {'u': 1.0, 't_start': 1.0, 't_end': 5.0, 't_step': 0.05}

# Rotating log of at most ~10MB plus one backup
LOG_MAX_BYTES: int = 10_000_000
LOG_BACKUP_COUNT: int = 1
LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def time_range(start: float, end: float, step: float) -> np.ndarray:
    """
    Inclusive, equi-spaced times from start to end
    """
    if step <= 0 or end < start or start < 0:
        raise ParameterError(f"Invalid time range: start={start}, end={end}, step={step}")
    n = int(round((end - start) / step))
    return start + step * np.arange(n + 1)


class Controller:
    LOGGER_NAME: str = "frac-gm"
    LOG_FILE_LOCATION: str = abspath(join(dirname(__file__), '..', 'log.txt'))
    """
    Provides methods for indirection between the numerical library and the command-line interface.
    Every command builds a DataFrame and a metadata dict that the ExportService turns into CSV.
    execute() converts library errors into logged messages and exit codes.
    """
    @staticmethod
    def setup_logger(logger_name: str, run_logger: bool, log_file: Optional[str] = None):
        """
        Sends the package logger to a rotating file when run_logger is set and silences it otherwise.
        Calling it again replaces the handlers of the previous call.
        """
        logger = logging.getLogger(logger_name)
        logger.propagate = False
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        if not run_logger:
            logger.addHandler(logging.NullHandler())
            return

        if log_file is not None:
            Controller.LOG_FILE_LOCATION = abspath(log_file)
        file_handler = RotatingFileHandler(Controller.LOG_FILE_LOCATION, maxBytes=LOG_MAX_BYTES,
                                           backupCount=LOG_BACKUP_COUNT)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.setLevel(logging.DEBUG)
        logger.addHandler(file_handler)
        logger.info(f"frac-gm {__version__} logging to {Controller.LOG_FILE_LOCATION}")

    @staticmethod
    def log(msg: str, level: int):
        logger = logging.getLogger(Controller.LOGGER_NAME)
        logger.log(level, msg)

    @staticmethod
    def get_log_history(tail: Optional[int] = None) -> str:
        """
        Text of the current log file, or only its last tail lines. Empty when no log file can be read.
        """
        try:
            with open(Controller.LOG_FILE_LOCATION) as f:
                lines = f.readlines()
        except (FileNotFoundError, PermissionError):
            return ''
        if tail is not None:
            lines = lines[-tail:] if tail > 0 else []
        return ''.join(lines)

    def __init__(self, run_logger: bool = False, log_file: Optional[str] = None, threads: int = 1,
                 progress: bool = False, error_callback: Optional[Callable[[str], None]] = None):
        self.setup_logger(self.LOGGER_NAME, run_logger, log_file)
        self.threads: int = max(1, threads)
        self.progress: bool = progress
        self.export_service: ExportService = ExportService()
        self.error_callback: Optional[Callable[[str], None]] = error_callback

    def display_error(self, error_msg: str):
        self.log(f"Error displayed: {error_msg}", logging.ERROR)
        if self.error_callback is not None:
            self.error_callback(error_msg)

    def execute(self, command: str, action: Callable[[], T]) -> tuple[Optional[T], int]:
        """
        Runs a command action and maps failures to exit codes:
        2 for parameter and domain errors, 3 for numeric failures, 4 for validation failures.
        :return: (result, exit code); result is None on failure
        """
        self.log(f"Command started: {command}", logging.INFO)
        try:
            result = action()
        except (ParameterError, DomainError, GridError, UnsupportedSpecError) as e:
            self.log(traceback.format_exc(), logging.ERROR)
            self.display_error(str(e))
            return None, EXIT_USAGE
        except (NumericError, ResolutionError) as e:
            self.log(traceback.format_exc(), logging.ERROR)
            self.display_error(str(e))
            return None, EXIT_NUMERIC
        except ValidationFailure as e:
            self.log(traceback.format_exc(), logging.ERROR)
            self.display_error(str(e))
            return None, EXIT_VALIDATION
        except FracGMError as e:
            self.log(traceback.format_exc(), logging.ERROR)
            self.display_error(str(e))
            return None, EXIT_NUMERIC
        except Exception as e:
            self.log(traceback.format_exc(), logging.ERROR)
            self.display_error(f"Unexpected error in {command}: {str(e)}")
            return None, EXIT_NUMERIC

        self.log(f"Command finished: {command}", logging.INFO)
        return result, EXIT_SUCCESS

    def export(self, df: DataFrame, metadata: dict) -> str:
        return self.export_service.export(df, metadata, 'csv', self.progress).getvalue()

    def _base_metadata(self, command: str, strategy: Optional[ProcessStrategy], settings: ProcessSettings) -> dict:
        metadata = {'command': command, 'version': __version__}
        if strategy is not None:
            metadata.update(strategy.metadata())
        metadata.update({f"quadrature_{key}": value for key, value in settings.quadrature.to_metadata().items()})
        return metadata

    def _map(self, fn: Callable, items: Sequence, desc: str) -> list:
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            return list(tqdm(executor.map(fn, items), total=len(items), desc=desc, leave=False,
                             disable=not self.progress))

    def _evaluate(self, settings: ProcessSettings, process: str, error_estimate: bool,
                  fn: Callable[[ProcessStrategy], float]) -> tuple[float, float]:
        # (value, a posteriori error); closed forms have no quadrature error
        strategy = ProcessFactory.get_strategy(process, settings)
        if not error_estimate:
            return fn(strategy), 0.0
        result = with_error_estimate(lambda cfg: fn(ProcessFactory.get_strategy(process, replace(settings, quadrature=cfg))),
                                     settings.quadrature)
        return result.value, result.error

    def _warnings(self, strategy: ProcessStrategy, alphas: Sequence[float]) -> str:
        messages = {f"{message} (alpha={alpha:g})" for alpha in alphas for message in strategy.warnings(alpha)}
        return '; '.join(sorted(messages))

    def _run_metadata(self, settings: ProcessSettings, error_estimate: bool, step: float) -> dict:
        # With the error estimate the emitted values come from the doubled rule
        panels = settings.quadrature.doubled().panels if error_estimate else settings.quadrature.panels
        return {'error_estimate': error_estimate, 'quadrature_panels': panels, 't_step': step}

    def var_curve(self, process: str, settings: ProcessSettings, alphas: Optional[Sequence[float]] = None,
                  t_start: Optional[float] = None, t_end: Optional[float] = None, t_step: Optional[float] = None,
                  error_estimate: bool = True, with_mean: bool = False) -> tuple[DataFrame, dict]:
        """
        Variance curves, one column per alpha. Non-fractional processes give a single 'var' column.
        With with_mean, a mean column follows each variance column.
        Unset arguments fall back to the preset of the process.
        """
        strategy = ProcessFactory.get_strategy(process, settings)
        preset = PRESETS.get(strategy.name, DEFAULT_PRESET)
        alphas = tuple(alphas) if alphas else preset['alphas']
        step = preset['t_step'] if t_step is None else t_step
        times = time_range(preset['t_start'] if t_start is None else t_start,
                           preset['t_end'] if t_end is None else t_end, step)
        columns: dict[str, list[float]] = {'t': list(times)}
        max_error = 0.0
        column_alphas = alphas if strategy.fractional else (1.0,)
        for alpha in column_alphas:
            label = f"alpha={alpha:g}" if strategy.fractional else 'var'
            self.log(f"var-curve {strategy.descriptor(alpha)} on {len(times)} times", logging.DEBUG)
            evaluated = self._map(lambda t: self._evaluate(settings, process, error_estimate,
                                                           lambda s: s.variance(t, alpha)), list(times), label)
            columns[label] = [value for value, _ in evaluated]
            max_error = max([max_error] + [error for _, error in evaluated])
            if with_mean:
                mean_label = f"mean {label}" if strategy.fractional else 'mean'
                means = self._map(lambda t: self._evaluate(settings, process, error_estimate,
                                                           lambda s: s.mean(t, alpha)), list(times), mean_label)
                columns[mean_label] = [value for value, _ in means]
                max_error = max([max_error] + [error for _, error in means])

        metadata = self._base_metadata('var-curve', strategy, settings)
        metadata.update({
            'alphas': list(alphas) if strategy.fractional else 'n/a',
            't_start': float(times[0]),
            't_end': float(times[-1]),
            **self._run_metadata(settings, error_estimate, step),
            'mean': with_mean,
            'quadrature_max_error': max_error,
            'warnings': self._warnings(strategy, alphas) or 'none'
        })
        return DataFrame(columns), metadata

    def cov_table(self, process: str, settings: ProcessSettings, alpha: float = 0.5, u: Optional[float] = None,
                  t_start: Optional[float] = None, t_end: Optional[float] = None, t_step: Optional[float] = None,
                  full_grid: bool = False, error_estimate: bool = True) -> tuple[DataFrame, dict]:
        """
        Either the slice t -> cov(u, t) for a fixed u, or the full matrix of cov(u, t) over the time range
        (rows u, columns t).
        """
        strategy = ProcessFactory.get_strategy(process, settings)
        u = COV_TABLE_PRESET['u'] if u is None else u
        step = COV_TABLE_PRESET['t_step'] if t_step is None else t_step
        times = time_range(COV_TABLE_PRESET['t_start'] if t_start is None else t_start,
                           COV_TABLE_PRESET['t_end'] if t_end is None else t_end, step)
        covariance = lambda pair: self._evaluate(settings, process, error_estimate,
                                                 lambda s: s.covariance(pair[0], pair[1], alpha))
        if full_grid:
            pairs = [(times[i], times[j]) for i in range(len(times)) for j in range(i, len(times))]
            evaluated = self._map(covariance, pairs, "Covariance grid")
            matrix = np.empty((len(times), len(times)))
            index = 0
            for i in range(len(times)):
                for j in range(i, len(times)):
                    matrix[i, j] = matrix[j, i] = evaluated[index][0]
                    index += 1
            df = DataFrame(matrix, index=[f"{t:.17g}" for t in times], columns=[f"{t:.17g}" for t in times])
            df.index.name = 'u'
        else:
            evaluated = self._map(covariance, [(u, t) for t in times], "Covariance slice")
            df = DataFrame({'t': times, 'cov': [value for value, _ in evaluated]})

        metadata = self._base_metadata('cov-table', strategy, settings)
        metadata.update({
            'alpha': alpha if strategy.fractional else 'n/a',
            'layout': 'full-grid' if full_grid else 'slice',
            'u': u if not full_grid else 'grid',
            't_start': float(times[0]),
            't_end': float(times[-1]),
            **self._run_metadata(settings, error_estimate, step),
            'quadrature_max_error': max([0.0] + [error for _, error in evaluated]),
            'warnings': self._warnings(strategy, [alpha]) or 'none'
        })
        return df, metadata

    def _simulate_one(self, strategy: ProcessStrategy, alpha: float, method: str, t_end: float, h: float,
                      n_paths: int, seed: int, underlying_cache: dict) -> PathEnsemble:
        if method == 'cholesky':
            grid = TimeGrid.uniform_grid(t_end, h, include_origin=False)
            matrix = build_cov_matrix(lambda u, t: strategy.covariance(u, t, alpha), grid, strategy.descriptor(alpha),
                                      self.threads, self.progress)
            factor = cholesky_factor(matrix)
            return sample_paths(factor, n_paths, seed).with_origin()
        if method == 'pathwise':
            grid = TimeGrid.uniform_grid(t_end, h, include_origin=True)
            if seed not in underlying_cache:
                underlying_cache[seed] = strategy.simulate_underlying(grid, n_paths, seed)
            underlying = underlying_cache[seed]
            order = strategy.integration_order(alpha)
            if order is None:
                return underlying
            return pathwise_rl_integral(underlying, order)
        raise ParameterError(f"Invalid simulation method: {method}. Valid methods: cholesky, pathwise")

    def simulate(self, process: str, settings: ProcessSettings, alphas: Sequence[float] = (0.5,),
                 t_end: float = 2.0, h: float = 0.01, n_paths: int = 10, seed: int = 0, method: str = 'cholesky',
                 shared_z: bool = True) -> tuple[DataFrame, dict]:
        """
        Simulated paths, one row per (alpha, path), pinned to X(0) = 0.
        With shared_z every alpha reuses the Gaussian stream of the seed, giving comparable trajectories;
        otherwise the k-th alpha uses derive_seed(seed, k).
        """
        strategy = ProcessFactory.get_strategy(process, settings)
        if n_paths < 0:
            raise ParameterError(f"n_paths must be nonnegative, instead got {n_paths}")
        alphas = tuple(alphas) if strategy.fractional else (1.0,)
        underlying_cache: dict = {}
        frames: list[DataFrame] = []
        seeds: list[int] = []
        jitters: list[float] = []
        for k, alpha in enumerate(alphas):
            alpha_seed = seed if shared_z else derive_seed(seed, k)
            seeds.append(alpha_seed)
            self.log(f"Simulating {n_paths} paths of {strategy.descriptor(alpha)} by {method}", logging.DEBUG)
            ensemble = self._simulate_one(strategy, alpha, method, t_end, h, n_paths, alpha_seed, underlying_cache)
            jitters.append(ensemble.metadata.get('jitter', 0.0))
            frame = ensemble.to_frame()
            frame.insert(0, 'alpha', alpha if strategy.fractional else float('nan'))
            frames.append(frame.reset_index())

        df = concat(frames, ignore_index=True) if frames else DataFrame()
        metadata = self._base_metadata('simulate', strategy, settings)
        metadata.update({
            'method': method,
            'seed': seed,
            'alpha_seeds': seeds,
            'shared_z': shared_z,
            'generator_id': GENERATOR_ID,
            'alphas': list(alphas) if strategy.fractional else 'n/a',
            'grid_step': h,
            't_end': t_end,
            **self._run_metadata(settings, False, h),
            'n_paths': n_paths,
            'jitter': jitters if method == 'cholesky' else 'n/a',
            'warnings': self._warnings(strategy, alphas) or 'none'
        })
        return df, metadata

    def validate(self, suite: str, seed: int = 0, n_paths: int = DEFAULT_N_PATHS,
                 cfg: QuadratureConfig = QuadratureConfig()) -> tuple[DataFrame, dict, bool]:
        """
        Runs a validation suite.
        :return: (report, metadata, all checks passed)
        """
        validation_suite = SuiteFactory.get_suite(suite, seed, n_paths, cfg)
        results = validation_suite.run()
        passed = all(result.passed for result in results)
        df = DataFrame([result.to_row() for result in results])
        metadata = {
            'command': 'validate',
            'version': __version__,
            'suite': validation_suite.name,
            'seed': seed,
            'n_paths': n_paths,
            **{f"quadrature_{key}": value for key, value in cfg.to_metadata().items()},
            'passed': passed
        }
        self.log(f"Validation suite {validation_suite.name}: {'passed' if passed else 'failed'}", logging.INFO)
        return df, metadata, passed

    def neuro(self, params: NeuronParams, alpha: float = 0.5, t_end: float = 2.0, h: float = 0.01,
              n_paths: int = 10, seed: int = 0, cfg: QuadratureConfig = QuadratureConfig()) -> tuple[DataFrame, dict]:
        """
        Voltage paths of the fractional neuron, one row per path, preceded by a row of analytic means.
        """
        grid = TimeGrid.uniform_grid(t_end, h, include_origin=True)
        eta = simulate_eta(params, grid, n_paths, seed)
        voltage = simulate_voltage(params, eta, alpha)
        means = self._map(lambda t: voltage_mean(params, t, alpha, cfg), list(grid.times), "Analytic mean")
        frame = voltage.to_frame().reset_index()
        frame['path'] = frame['path'].astype(str)
        mean_row = DataFrame([['analytic_mean'] + means], columns=frame.columns)
        df = concat([mean_row, frame], ignore_index=True)

        metadata = {
            'command': 'neuro',
            'version': __version__,
            'alpha': alpha,
            **params.to_metadata(),
            **voltage.header_metadata(),
            **{f"quadrature_{key}": value for key, value in cfg.to_metadata().items()}
        }
        return df, metadata
