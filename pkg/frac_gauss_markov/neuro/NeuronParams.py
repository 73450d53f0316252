import math
from dataclasses import dataclass, fields
from typing import Union

from frac_gauss_markov.FracGMError import ParameterError, UnsupportedSpecError

STATIONARY: str = "stationary"


@dataclass(frozen=True)
class NeuronParams:
    """
    Parameters of the fractional perfect integrator driven by coloured noise:
        C_m D^a V(t) = g_L V_L + eta(t),   V(0) = V0 = 0
        d eta = -(eta - I0)/tau dt + (varsigma/tau) dB,   eta(0) = eta0
    The input current I(t) is the constant I0. eta0 is a number or STATIONARY, in which case
    eta(0) is drawn from the stationary law N(I0, varsigma^2/(2 tau)).
    """
    C_m: float = 1.0
    g_L: float = 0.0
    V_L: float = 0.0
    tau: float = 1.0
    varsigma: float = 1.0
    I0: float = 0.0
    V0: float = 0.0
    eta0: Union[float, str] = 0.0

    def __post_init__(self):
        if callable(self.I0):
            raise UnsupportedSpecError("Only a constant input current I0 is supported")
        for name in ('C_m', 'g_L', 'V_L', 'tau', 'varsigma', 'I0', 'V0'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ParameterError(f"{name} must be a finite real number, instead got {value!r}")
        if self.C_m <= 0:
            raise ParameterError(f"C_m must be positive, instead got {self.C_m}")
        if self.tau <= 0:
            raise ParameterError(f"tau must be positive, instead got {self.tau}")
        if self.varsigma <= 0:
            raise ParameterError(f"varsigma must be positive, instead got {self.varsigma}")
        if self.V0 != 0:
            raise ParameterError(f"The fractional integral solution requires V0 = 0, instead got {self.V0}")
        if isinstance(self.eta0, str):
            if self.eta0 != STATIONARY:
                raise ParameterError(f"eta0 must be a number or '{STATIONARY}', instead got {self.eta0!r}")
        elif isinstance(self.eta0, bool) or not isinstance(self.eta0, (int, float)) or not math.isfinite(self.eta0):
            raise ParameterError(f"eta0 must be a finite real number or '{STATIONARY}', instead got {self.eta0!r}")

    @property
    def stationary_start(self) -> bool:
        return self.eta0 == STATIONARY

    @property
    def drift(self) -> float:
        """
        Constant forcing g_L V_L / C_m
        """
        return self.g_L * self.V_L / self.C_m

    @staticmethod
    def from_mapping(mapping: dict) -> 'NeuronParams':
        """
        Builds parameters from a mapping such as a parsed TOML table. Unknown keys are rejected.
        """
        known = {f.name for f in fields(NeuronParams)}
        unknown = set(mapping) - known
        if unknown:
            raise ParameterError(f"Unknown neuron parameters: {', '.join(sorted(unknown))}. "
                                 f"Valid parameters: {', '.join(sorted(known))}")
        return NeuronParams(**mapping)

    def to_metadata(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}
