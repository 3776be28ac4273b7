"""Wigner function at the phase-space origin for the multimode multiphoton
Jaynes-Cummings model."""

from ._core import *  # noqa: F401,F403
from ._core import ConfigError, JcmError, Parity, HermitePoissonVariant  # noqa: F401

__version__ = "0.1.0"
