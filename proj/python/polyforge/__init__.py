"""Exact face-lattice kernel for polytopes given by vertex-facet incidences."""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from . import _core as _impl
except ImportError:  # build-tree layout: _core.so next to this package on sys.path
    from _core import *  # noqa: F401,F403
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "1.0.0"
