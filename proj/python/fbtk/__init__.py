"""Exact polynomial / exponential-functional toolkit (python surface)."""

try:
    from fbtk._fbtk import *  # noqa: F401,F403
    from fbtk._fbtk import __version__  # noqa: F401
except ImportError:  # in-tree builds put the module on PYTHONPATH directly
    from _fbtk import *  # noqa: F401,F403
    from _fbtk import __version__  # noqa: F401
