from .ProcessStrategy import ProcessStrategy
from .ProcessFactory import ProcessFactory, ValidProcess
