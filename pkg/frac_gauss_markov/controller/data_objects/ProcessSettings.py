from dataclasses import dataclass, field

from frac_gauss_markov.frac_cov import CrossTerm, DEFAULT_CROSS_TERM
from frac_gauss_markov.gm_core import OUParams, SOUParams
from frac_gauss_markov.quadrature import QuadratureConfig


@dataclass(frozen=True)
class ProcessSettings:
    """
    Process parameters shared by every command. mu and sigma parameterise both OU variants;
    beta and y only apply to the non-stationary OU process.
    """
    mu: float = 1.0
    sigma: float = 1.0
    beta: float = 0.0
    y: float = 0.0
    cross_term: CrossTerm = DEFAULT_CROSS_TERM
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)

    def ou_params(self) -> OUParams:
        return OUParams(mu=self.mu, sigma=self.sigma, beta=self.beta, y=self.y)

    def sou_params(self) -> SOUParams:
        return SOUParams(mu=self.mu, sigma=self.sigma)
