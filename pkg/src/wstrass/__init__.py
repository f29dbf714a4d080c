"""Weierstrass-point data for superelliptic curves and smooth plane quartics."""

from wstrass.exact import DomainError, PrecisionError

__version__ = "0.1.0"

__all__ = ["DomainError", "PrecisionError", "__version__"]
