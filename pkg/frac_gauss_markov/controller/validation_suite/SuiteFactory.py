from enum import Enum

from frac_gauss_markov.FracGMError import ParameterError
from frac_gauss_markov.controller.validation_suite.ValidationSuite import ValidationSuite
from frac_gauss_markov.controller.validation_suite.concrete_suites import *
from frac_gauss_markov.quadrature import QuadratureConfig


class ValidSuite(Enum):
    LIMITS = 'limits'
    CROSSING = 'crossing'
    MC = 'mc'
    NEURO = 'neuro'


class SuiteFactory:
    """
    Maps a suite name to a concrete ValidationSuite object
    """
    SUITE_MAP: dict = {
        ValidSuite.LIMITS: LimitsSuite,
        ValidSuite.CROSSING: CrossingSuite,
        ValidSuite.MC: MonteCarloSuite,
        ValidSuite.NEURO: NeuroSuite
    }

    @staticmethod
    def get_suite(suite: str, seed: int, n_paths: int, cfg: QuadratureConfig) -> ValidationSuite:
        """
        :raises ParameterError: if the name is not a valid suite
        """
        try:
            valid_suite = ValidSuite(suite.lower())
        except ValueError:
            accepted: str = ', '.join([s.value for s in ValidSuite])
            raise ParameterError(f"Invalid validation suite: {suite}. Valid suites: {accepted}")

        return SuiteFactory.SUITE_MAP[valid_suite](seed, n_paths, cfg)
