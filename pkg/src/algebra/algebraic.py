"""Real algebraic numbers in isolating-interval form.

A value is a defining polynomial together with either an exact rational point
(``lo == hi``) or an open interval with rational endpoints containing exactly
one root of the defining polynomial. Rational values always use point form;
irrational values built here carry the irreducible factor owning the root.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .polynomial import (
    Polynomial,
    gcd,
    isolate_real_roots,
    owning_factor,
    refine_interval,
    sign_at,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class AlgebraicNumber:
    """Exact real algebraic number.

    Dataclass equality compares representations; use :func:`equals` for
    numeric equality.

    Attributes:
        defpoly: Nonzero integer polynomial having this number as a root.
        lo: Lower endpoint, or the value itself in point form.
        hi: Upper endpoint, equal to ``lo`` in point form.
    """

    defpoly: Polynomial
    lo: Fraction
    hi: Fraction

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @classmethod
    def from_rational(cls, value: Fraction | int | str) -> AlgebraicNumber:
        q = Fraction(value)
        return cls(Polynomial((-q.numerator, q.denominator)), q, q)

    @classmethod
    def from_interval(
        cls, defpoly: Polynomial, lo: Fraction | int | str, hi: Fraction | int | str
    ) -> AlgebraicNumber:
        """Validate an isolating interval and normalise it.

        The defining polynomial is replaced by the irreducible factor owning
        the isolated root, and a rational root is returned in point form.

        Raises:
            ValueError: If the polynomial is constant, the interval is empty,
                an endpoint is a root, or the interval does not hold exactly
                one root.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        if defpoly.is_zero():
            msg = "Defining polynomial must be nonzero"
            raise ValueError(msg)
        s = squarefree_part(defpoly)
        if s.degree < 1:
            msg = f"Constant polynomial {defpoly} has no roots"
            raise ValueError(msg)
        if lo == hi:
            if sign_at(s, lo) != 0:
                msg = f"{lo} is not a root of {defpoly}"
                raise ValueError(msg)
            return cls.from_rational(lo)
        count = sturm_count(s, lo, hi)
        if count != 1:
            msg = f"Interval ({lo}, {hi}) holds {count} roots of {defpoly}, expected 1"
            raise ValueError(msg)
        owner = owning_factor(s, lo, hi)
        if owner.degree == 1:
            return cls.from_rational(Fraction(-owner.coeffs[0], owner.coeffs[1]))
        return cls(owner, lo, hi)

    def to_json(self) -> dict[str, Any]:
        if self.is_point:
            return {"defpoly": self.defpoly.to_json(), "point": str(self.lo)}
        return {
            "defpoly": self.defpoly.to_json(),
            "interval": [str(self.lo), str(self.hi)],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> AlgebraicNumber:
        """Inverse of :meth:`to_json`; validates the isolating interval."""
        if "point" in data:
            return cls.from_rational(data["point"])
        try:
            poly = Polynomial.from_json(data["defpoly"])
            lo, hi = data["interval"]
        except (KeyError, TypeError, ValueError) as e:
            msg = f"Malformed algebraic number: {data!r}"
            raise ValueError(msg) from e
        return cls.from_interval(poly, lo, hi)

    def is_zero(self) -> bool:
        return self.is_point and self.lo == 0

    def __str__(self) -> str:
        if self.is_point:
            return str(self.lo)
        return f"root of {self.defpoly} in ({self.lo}, {self.hi})"


def negate(t: AlgebraicNumber) -> AlgebraicNumber:
    """Return ``-t``; the defining polynomial becomes ``p(-x)``."""
    if t.is_point:
        return AlgebraicNumber.from_rational(-t.lo)
    flipped = Polynomial(
        tuple(-c if i % 2 else c for i, c in enumerate(t.defpoly.coeffs))
    )
    if flipped.leading < 0:
        flipped = -flipped
    return AlgebraicNumber(flipped, -t.hi, -t.lo)


def refine(t: AlgebraicNumber) -> AlgebraicNumber:
    """Halve the isolating interval, switching to point form on an exact hit."""
    if t.is_point:
        return t
    lo, hi = refine_interval(t.defpoly, t.lo, t.hi)
    if lo == hi:
        return AlgebraicNumber.from_rational(lo)
    return AlgebraicNumber(t.defpoly, lo, hi)


@lru_cache(maxsize=65536)
def vanishes(t: AlgebraicNumber, p: Polynomial) -> bool:
    """Whether ``p(t) == 0`` exactly."""
    if p.is_zero():
        return True
    if t.is_point:
        return sign_at(p, t.lo) == 0
    g = gcd(p, t.defpoly)
    if g.degree < 1:
        return False
    if sign_at(g, t.lo) == 0 or sign_at(g, t.hi) == 0:
        return False
    return sturm_count(g, t.lo, t.hi) >= 1


def equals(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    """Exact numeric equality of two algebraic numbers."""
    if a.is_point and b.is_point:
        return a.lo == b.lo
    if a.is_point:
        return b.lo < a.lo < b.hi and sign_at(b.defpoly, a.lo) == 0
    if b.is_point:
        return equals(b, a)
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo >= hi:
        return False
    g = gcd(a.defpoly, b.defpoly)
    if g.degree < 1:
        return False
    # g divides a.defpoly, whose only root in (a.lo, a.hi) is a itself
    for x in (lo, hi):
        if sign_at(g, x) == 0:
            return False
    return sturm_count(g, lo, hi) >= 1


def compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Return ``-1``, ``0`` or ``1`` according to the order of ``a`` and ``b``."""
    if equals(a, b):
        return 0
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        a, b = refine(a), refine(b)


def root_multiplicity(t: AlgebraicNumber, p: Polynomial) -> int:
    """Multiplicity of ``t`` as a root of ``p``; zero when it is not a root.

    Raises:
        ValueError: If ``p`` is the zero polynomial.
    """
    if p.is_zero():
        msg = "Root multiplicity in the zero polynomial is undefined"
        raise ValueError(msg)
    for factor, exponent in squarefree_decomposition(p):
        if vanishes(t, factor):
            return exponent
    return 0


def real_roots(p: Polynomial) -> list[AlgebraicNumber]:
    """Distinct real roots of ``p`` in increasing order.

    Each irrational root carries the irreducible factor of ``p`` it belongs to
    as defining polynomial.

    Raises:
        ValueError: If ``p`` is the zero polynomial.
    """
    roots: list[AlgebraicNumber] = []
    for lo, hi in isolate_real_roots(p):
        if lo == hi:
            roots.append(AlgebraicNumber.from_rational(lo))
        else:
            roots.append(AlgebraicNumber(owning_factor(p, lo, hi), lo, hi))
    logger.debug(f"{p} has {len(roots)} distinct real roots")
    return roots
