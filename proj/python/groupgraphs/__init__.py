"""Finite-group graph construction and theorem verification.

Thin wrapper around the compiled _groupgraphs module.
"""

try:
    from ._groupgraphs import *  # noqa: F401,F403
    from ._groupgraphs import __doc__ as _doc
except ImportError:  # development builds put the module on sys.path directly
    from _groupgraphs import *  # noqa: F401,F403
    from _groupgraphs import __doc__ as _doc

__doc__ = _doc
__version__ = "1.0.0"
