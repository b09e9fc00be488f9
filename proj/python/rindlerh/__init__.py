from ._rindlerh import *  # noqa: F401,F403
from ._rindlerh import __doc__  # noqa: F401
