"""Zimin types, Zimin pattern search, Fibonacci-word queries and avoidance bounds."""

from ._zimin import *  # noqa: F401,F403
from ._zimin import CapExceeded, InvalidArgument, ZiminError

__all__ = [name for name in dir() if not name.startswith("_")]
