"""Poisson-Szego kernel, hyperbolic harmonic extensions, and sharp
Hardy-space pointwise estimates on the unit ball."""

from ._hypharm import *  # noqa: F401,F403
from ._hypharm import __version__  # noqa: F401
