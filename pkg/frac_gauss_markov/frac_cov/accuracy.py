import logging
import warnings

from frac_gauss_markov.FracGMError import LowOrderAccuracyWarning
from frac_gauss_markov.quadrature import FracOrder

LOGGER_NAME: str = "frac-gm"
LOW_ORDER_WARNING: str = "low-α accuracy warning"
# Processes whose quadrature is known to degrade for alpha below FracOrder.LOW_ORDER_THRESHOLD
LOW_ORDER_SENSITIVE: frozenset[str] = frozenset({'fiou', 'fisou'})


def accuracy_warnings(process: str, alpha) -> list[str]:
    """
    :param process: process name, e.g. 'fibm', 'fiou', 'fisou'
    :param alpha: fractional order
    :return: warning strings to record in output metadata, empty when the result is trusted
    """
    order = FracOrder.of(alpha)
    if process.lower() in LOW_ORDER_SENSITIVE and order.is_low_order:
        return [LOW_ORDER_WARNING]
    return []


def warn_low_order(process: str, order: FracOrder):
    for message in accuracy_warnings(process, order):
        text = f"{message}: {process.upper()} evaluated at alpha={order.alpha}"
        logging.getLogger(LOGGER_NAME).warning(text)
        warnings.warn(text, LowOrderAccuracyWarning, stacklevel=3)
