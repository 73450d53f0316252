from .ProcessSettings import ProcessSettings
from .CheckResult import CheckResult
