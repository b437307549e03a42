"""Coupled fixed points of mixed-monotone map pairs on ordered metric spaces.

Thin package wrapper around the compiled core. When installed as a wheel the
extension lives inside this package; in a plain CMake build it sits on
PYTHONPATH as a top-level module.
"""

try:
    from ._fgfp import *  # noqa: F401,F403
    from ._fgfp import __doc__ as _core_doc
except ImportError:  # pragma: no cover - CMake build layout
    from _fgfp import *  # noqa: F401,F403
    from _fgfp import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
