from .closed_forms import ibm_cov, ibm_var, iou_mean, iou_var, iou_cov, isou_cov, isou_var
from .fibm import fibm_var, fibm_cov
from .figm import figm_mean, figm_cov, figm_var
from .fiou import fiou_cov, fiou_var, fiou_mean, fiou_components
from .fisou import fisou_cov, fisou_var, fisou_components, FisouComponents, CrossTerm, DEFAULT_CROSS_TERM
from .caputo import caputo_derivative, CaputoMethod
from .accuracy import accuracy_warnings, LOW_ORDER_WARNING
from .shape import variance_crossing_time, count_local_maxima, is_unimodal
