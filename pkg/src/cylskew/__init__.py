"""Cylindric skew Schur functions and the combinatorics around them."""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
