"""Python interface to the mubkit C++ core.

Everything lives in the compiled extension; this package just re-exports it.
"""

from _mubkit import *  # noqa: F401,F403
from _mubkit import __doc__  # noqa: F401
