import math
from dataclasses import dataclass
from enum import Enum

from frac_gauss_markov.FracGMError import ParameterError


class ProcessKind(Enum):
    """
    Gauss-Markov processes with a built-in constructor
    """
    BM = 'bm'
    OU = 'ou'
    SOU = 'sou'


def _require_finite(**values: float):
    for name, value in values.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
            raise ParameterError(f"{name} must be a finite real number, instead got {value!r}")


@dataclass(frozen=True)
class OUParams:
    """
    Parameters of the (non-stationary) Ornstein-Uhlenbeck process
    dY = -mu(Y - beta)dt + sigma dB, Y(0) = y
    """
    mu: float
    sigma: float
    beta: float = 0.0
    y: float = 0.0

    def __post_init__(self):
        _require_finite(mu=self.mu, sigma=self.sigma, beta=self.beta, y=self.y)
        if self.mu <= 0:
            raise ParameterError(f"mu must be positive, instead got {self.mu}")
        if self.sigma <= 0:
            raise ParameterError(f"sigma must be positive, instead got {self.sigma}")

    def to_metadata(self) -> dict[str, float]:
        return {'mu': self.mu, 'sigma': self.sigma, 'beta': self.beta, 'y': self.y}


@dataclass(frozen=True)
class SOUParams:
    """
    Parameters of the stationary Ornstein-Uhlenbeck process, started from its
    stationary law N(0, sigma^2 / (2 mu))
    """
    mu: float
    sigma: float

    def __post_init__(self):
        _require_finite(mu=self.mu, sigma=self.sigma)
        if self.mu <= 0:
            raise ParameterError(f"mu must be positive, instead got {self.mu}")
        if self.sigma == 0:
            raise ParameterError("sigma must be non-zero")

    @property
    def r0(self) -> float:
        return self.sigma ** 2 / (2 * self.mu)

    def as_ou(self) -> OUParams:
        """
        :return: the non-stationary OU parameters with the same rate and diffusion, started at 0 with zero asymptotic mean
        :rtype: OUParams
        """
        return OUParams(mu=self.mu, sigma=abs(self.sigma), beta=0.0, y=0.0)

    def to_metadata(self) -> dict[str, float]:
        return {'mu': self.mu, 'sigma': self.sigma}
