from .ValidationSuite import ValidationSuite, DEFAULT_N_PATHS
from .SuiteFactory import SuiteFactory, ValidSuite
