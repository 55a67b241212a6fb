"""Exact polynomial arithmetic and real algebraic numbers.

Everything in this package works over arbitrary-precision integers, with
rationals (``fractions.Fraction``) used only at evaluation boundaries.
"""

from .algebraic import AlgebraicNumber, real_roots, root_multiplicity
from .polynomial import Polynomial

__all__ = ["AlgebraicNumber", "Polynomial", "real_roots", "root_multiplicity"]
