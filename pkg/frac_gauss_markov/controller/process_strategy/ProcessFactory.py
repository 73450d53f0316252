from enum import Enum

from frac_gauss_markov.FracGMError import ParameterError
from frac_gauss_markov.controller.data_objects import ProcessSettings
from frac_gauss_markov.controller.process_strategy.ProcessStrategy import ProcessStrategy
from frac_gauss_markov.controller.process_strategy.concrete_strategies import *


class ValidProcess(Enum):
    """
    Process names accepted by the commands
    """
    FIBM = 'fibm'
    FIOU = 'fiou'
    FISOU = 'fisou'
    IOU = 'iou'
    ISOU = 'isou'
    OU = 'ou'
    SOU = 'sou'


class ProcessFactory:
    """
    Provides a single public method to map a process name to a concrete ProcessStrategy object.
    Process names are treated as case-insensitive.
    """
    PROCESS_STRATEGY_MAP: dict = {
        ValidProcess.FIBM: FIBMStrategy,
        ValidProcess.FIOU: FIOUStrategy,
        ValidProcess.FISOU: FISOUStrategy,
        ValidProcess.IOU: IOUStrategy,
        ValidProcess.ISOU: ISOUStrategy,
        ValidProcess.OU: OUStrategy,
        ValidProcess.SOU: SOUStrategy
    }

    @staticmethod
    def get_strategy(process: str, settings: ProcessSettings) -> ProcessStrategy:
        """
        :param process: the name of a member of ValidProcess
        :param settings: parameters passed to the strategy
        :return: a concrete ProcessStrategy for the process
        :raises ParameterError: if the name is not a valid process
        """
        try:
            valid_process = ValidProcess(process.lower())
            strategy: ProcessStrategy = ProcessFactory.PROCESS_STRATEGY_MAP[valid_process](settings)
        except (KeyError, ValueError):
            accepted: str = ', '.join([p.value for p in ValidProcess])
            raise ParameterError(f"Invalid process: {process}. Valid processes: {accepted}")

        return strategy
