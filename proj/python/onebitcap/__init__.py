"""Exact capacities of MISO channels with one-bit DACs and ADCs.

Thin re-export of the native extension; see the package README for the
underlying model and the command-line tool.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
