from .FIBMStrategy import FIBMStrategy
from .FIOUStrategy import FIOUStrategy
from .FISOUStrategy import FISOUStrategy
from .IOUStrategy import IOUStrategy
from .ISOUStrategy import ISOUStrategy
from .OUStrategy import OUStrategy
from .SOUStrategy import SOUStrategy
