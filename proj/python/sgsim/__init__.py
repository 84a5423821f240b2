"""Stochastic-geometry interference engine bindings."""

try:
    from ._sgsim import *  # noqa: F401,F403
    from ._sgsim import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension directly on sys.path
    from _sgsim import *  # noqa: F401,F403
    from _sgsim import __version__  # noqa: F401
