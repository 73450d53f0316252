from .NeuronParams import NeuronParams, STATIONARY
from .model import (simulate_eta, simulate_voltage, voltage_mean, voltage_cov, voltage_var, ou_params_for,
                    sou_params_for)
