"""Python bindings for the stochastic scheduling laboratory."""

try:
    from ._stochsched import *  # noqa: F401,F403  (installed layout)
    from . import _stochsched as _core
except ImportError:  # pragma: no cover - in-tree builds put the module on PYTHONPATH
    from _stochsched import *  # noqa: F401,F403
    import _stochsched as _core

__doc__ = _core.__doc__
