from .FracOrder import FracOrder
from .QuadratureConfig import QuadratureConfig
from .singular import (InnerRegion, QuadratureResult, singular_left_integral, weighted_interval_integral,
                       weighted_nodes, compute_J, compute_H, nested_singular_integral, with_error_estimate,
                       gamma_fn, gamma_alpha, gamma_sq)
