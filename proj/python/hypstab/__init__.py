"""Stability functionals and front tracking for 1-D hyperbolic systems."""

try:
    from ._hypstab import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _hypstab import *  # noqa: F401,F403  (in-tree build)
