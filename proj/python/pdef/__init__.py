from ._pdef import *  # noqa: F401,F403
from ._pdef import PdefError, Presentation

__all__ = [name for name in dir() if not name.startswith("_")]
