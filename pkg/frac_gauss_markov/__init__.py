__version__ = "0.1.0"

__all__ = ['Controller', 'FracGMError']

from .FracGMError import FracGMError
from .controller import Controller
