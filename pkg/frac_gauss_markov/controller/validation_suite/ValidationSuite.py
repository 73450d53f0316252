import logging
import math
from abc import ABC, abstractmethod

from frac_gauss_markov.controller.data_objects import CheckResult
from frac_gauss_markov.quadrature import QuadratureConfig

LOGGER_NAME: str = "frac-gm"
DEFAULT_N_PATHS: int = 10_000


class ValidationSuite(ABC):
    """
    An abstract class for a group of acceptance checks. Concrete suites implement run() and build their
    results with the _close, _within and _bounded helpers so that every row carries its tolerance.
    Suites are deterministic given the seed.
    """
    name: str = ''

    def __init__(self, seed: int, n_paths: int, cfg: QuadratureConfig):
        """
        :param seed: seed of every simulated ensemble in the suite
        :param n_paths: ensemble size of Monte-Carlo checks
        :param cfg: quadrature configuration for the analytic values
        """
        self.seed: int = seed
        self.n_paths: int = n_paths
        self.cfg: QuadratureConfig = cfg
        self.results: list[CheckResult] = []

    @abstractmethod
    def run(self) -> list[CheckResult]:
        raise NotImplementedError()

    def _record(self, result: CheckResult) -> CheckResult:
        level = logging.DEBUG if result.passed else logging.WARNING
        logging.getLogger(LOGGER_NAME).log(level, f"[{self.name}] {result.check}: value={result.value:.10g} "
                                                  f"expected={result.expected} passed={result.passed}")
        self.results.append(result)
        return result

    def _close(self, check: str, value: float, expected: float, rel_tol: float) -> CheckResult:
        passed = math.isclose(value, expected, rel_tol=rel_tol, abs_tol=0.0)
        return self._record(CheckResult(self.name, check, value, f"{expected:.10g}", f"rel {rel_tol:g}", passed))

    def _within(self, check: str, value: float, lo: float, hi: float) -> CheckResult:
        passed = lo <= value <= hi
        return self._record(CheckResult(self.name, check, value, f"[{lo:g}, {hi:g}]", "interval", passed))

    def _bounded(self, check: str, value: float, expected: float, bound: float) -> CheckResult:
        passed = abs(value - expected) <= bound
        return self._record(CheckResult(self.name, check, value, f"{expected:.10g}", f"abs {bound:.4g}", passed))

    def _holds(self, check: str, condition: bool, description: str) -> CheckResult:
        return self._record(CheckResult(self.name, check, float(condition), description, "exact", bool(condition)))
