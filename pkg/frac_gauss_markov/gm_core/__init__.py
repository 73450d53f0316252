from .ProcessParams import OUParams, SOUParams, ProcessKind
from .GaussMarkovSpec import GaussMarkovSpec
from .processes import bm_spec, ou_spec, sou_spec, kernel, ou_mean, ou_var, sou_var, MIN_OU_RATE
