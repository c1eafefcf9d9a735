"""Gromov invariants of maps from Riemann surfaces to Grassmannians."""

from ._gwgr import *  # noqa: F401,F403
from ._gwgr import __doc__  # noqa: F401
