from .LimitsSuite import LimitsSuite
from .CrossingSuite import CrossingSuite
from .MonteCarloSuite import MonteCarloSuite
from .NeuroSuite import NeuroSuite
