"""gl stars on the unit sphere, their verification, and the induced parallelisms of P^3."""

from ._core import *  # noqa: F401,F403
from ._core import GlstarError, ConditionFailed, Fn1, GlStar, Parallelism, PLine

__all__ = [name for name in dir() if not name.startswith("_")]
