"""Eisenstein-series arc evaluation, zero location and bound verification."""

from eisarc._core import *  # noqa: F401,F403
from eisarc._core import __version__  # noqa: F401
