import math
from dataclasses import dataclass
from typing import Union

from frac_gauss_markov.FracGMError import ParameterError


@dataclass(frozen=True)
class FracOrder:
    """
    The order alpha of a Riemann-Liouville integral, restricted to [ALPHA_MIN, 1].
    Orders below LOW_ORDER_THRESHOLD are computed but flagged as inaccurate for OU-type processes.
    """
    ALPHA_MIN = 0.01
    LOW_ORDER_THRESHOLD = 0.1

    alpha: float

    def __post_init__(self):
        if isinstance(self.alpha, bool) or not isinstance(self.alpha, (int, float)) or not math.isfinite(self.alpha):
            raise ParameterError(f"alpha must be a finite real number, instead got {self.alpha!r}")
        if not (FracOrder.ALPHA_MIN <= self.alpha <= 1):
            raise ParameterError(f"alpha must lie in [{FracOrder.ALPHA_MIN}, 1], instead got {self.alpha}")

    def __float__(self) -> float:
        return float(self.alpha)

    @property
    def is_integer_order(self) -> bool:
        return self.alpha == 1

    @property
    def is_low_order(self) -> bool:
        return self.alpha < FracOrder.LOW_ORDER_THRESHOLD

    @staticmethod
    def of(alpha: Union['FracOrder', float]) -> 'FracOrder':
        if isinstance(alpha, FracOrder):
            return alpha
        return FracOrder(alpha)
