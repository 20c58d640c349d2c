"""Nucleon spin-flavor state preparation and verification toolkit."""

try:
    from ._nucleonsim import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # build-tree layout: extension next to this package on sys.path
    from _nucleonsim import *  # noqa: F401,F403

__version__ = "0.1.0"
