"""Python bindings for the lions-and-contamination workbench."""

try:
    from ._pylions import *  # noqa: F401,F403  (installed layout)
    from ._pylions import __doc__ as _core_doc
except ImportError:  # build-tree layout: extension sits next to the package
    from _pylions import *  # noqa: F401,F403
    from _pylions import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "1.0.0"
