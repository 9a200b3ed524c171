"""Partial distillability of noisy isotropic quantum networks.

Thin package over the compiled ``_core`` extension.
"""

from ._core import *  # noqa: F401,F403
from ._core import InputError, CapacityError, InvariantError, __version__  # noqa: F401
