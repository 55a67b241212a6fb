"""Univariate polynomials with arbitrary-precision integer coefficients.

``Polynomial`` keeps a canonical coefficient tuple for hashing, JSON and the
ring operations of the matching polynomial recursion, and converts to a
``sympy.Poly`` over ``ZZ`` for gcds, square-free and irreducible
factorisation, Sturm sequences, root counting and real root isolation.

Usage:
    from src.algebra.polynomial import Polynomial, isolate_real_roots

    p = Polynomial((-2, 0, 1))  # x^2 - 2
    intervals = isolate_real_roots(p)
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy as sp
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

logger = logging.getLogger(__name__)

Interval = tuple[Fraction, Fraction]

SYMBOL = sp.Symbol("x")


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial stored as coefficients from lowest to highest degree.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial is the empty tuple and two equal polynomials always compare
    and hash equal. The sympy form is built on first use and kept.

    Attributes:
        coeffs: Coefficients ``c_0, c_1, ..., c_d`` with ``c_d != 0``.
    """

    coeffs: tuple[int, ...] = ()
    _poly: sp.Poly | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        values = [int(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def constant(cls, value: int) -> Polynomial:
        return cls((value,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def from_poly(cls, poly: sp.Poly) -> Polynomial:
        """Read back a univariate sympy polynomial with integer coefficients."""
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def from_json(cls, data: Iterable[int | str]) -> Polynomial:
        """Build a polynomial from a low-to-high list of integers or decimal strings."""
        try:
            return cls(tuple(int(c) for c in data))
        except (TypeError, ValueError) as e:
            msg = f"Invalid polynomial coefficients: {data!r}"
            raise ValueError(msg) from e

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @property
    def poly(self) -> sp.Poly:
        """The same polynomial as a ``sympy.Poly`` in ``x`` over ``ZZ``."""
        if self._poly is None:
            high_first = list(reversed(self.coeffs)) or [0]
            object.__setattr__(self, "_poly", sp.Poly(high_first, SYMBOL, domain=ZZ))
        return self._poly

    @property
    def degree(self) -> int:
        """Degree of the polynomial, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: Polynomial | int) -> Polynomial:
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return sub(self, _coerce(other))

    def __rsub__(self, other: Polynomial | int) -> Polynomial:
        return sub(_coerce(other), self)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __call__(self, value: Fraction | int) -> Fraction:
        return eval_rational(self, Fraction(value))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                base = "x" if power == 1 else f"x^{power}"
                body = base if magnitude == 1 else f"{magnitude}*{base}"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _coerce(value: Polynomial | int) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def _rational(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


def _fraction(value: sp.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _normalise(poly: sp.Poly) -> Polynomial:
    """Primitive part of a sympy polynomial with a positive leading coefficient."""
    if poly.is_zero:
        return Polynomial()
    _, primitive = poly.primitive()
    result = Polynomial.from_poly(primitive)
    return -result if result.leading < 0 else result


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    size = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (0,) * (size - len(p.coeffs))
    b = q.coeffs + (0,) * (size - len(q.coeffs))
    return Polynomial(tuple(x + y for x, y in zip(a, b, strict=True)))


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return add(p, -q)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def shift_degree(p: Polynomial, k: int) -> Polynomial:
    """Multiply ``p`` by ``x^k``."""
    if p.is_zero():
        return p
    return Polynomial((0,) * k + p.coeffs)


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def eval_rational(p: Polynomial, value: Fraction) -> Fraction:
    """Evaluate ``p`` exactly at a rational point using Horner's scheme."""
    result = Fraction(0)
    for c in reversed(p.coeffs):
        result = result * value + c
    return result


def sign_at(p: Polynomial, value: Fraction) -> int:
    """Sign of ``p(value)`` computed in integers.

    With ``value = a/b`` and ``b > 0`` the sign of ``p(a/b)`` equals the sign of
    the homogenised sum ``sum c_i a^i b^(d-i)``.
    """
    if p.is_zero():
        return 0
    a, b = value.numerator, value.denominator
    d = p.degree
    total = 0
    a_pow = 1
    b_pows = [1] * (d + 1)
    for i in range(1, d + 1):
        b_pows[i] = b_pows[i - 1] * b
    for i, c in enumerate(p.coeffs):
        if c:
            total += c * a_pow * b_pows[d - i]
        a_pow *= a
    return (total > 0) - (total < 0)


def content(p: Polynomial) -> int:
    """Positive gcd of the coefficients, ``0`` for the zero polynomial."""
    return abs(int(p.poly.content()))


def primitive_part(p: Polynomial) -> Polynomial:
    """Divide out the content and make the leading coefficient positive."""
    return _normalise(p.poly)


def pseudo_remainder(a: Polynomial, b: Polynomial) -> Polynomial:
    """Pseudo-remainder ``prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b``.

    Raises:
        ZeroDivisionError: If ``b`` is the zero polynomial.
    """
    if b.is_zero():
        msg = "Pseudo-division by the zero polynomial"
        raise ZeroDivisionError(msg)
    return Polynomial.from_poly(a.poly.prem(b.poly))


def exact_quotient(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b`` when ``b`` divides ``a`` over the integers.

    Raises:
        ZeroDivisionError: If ``b`` is zero.
        ValueError: If the division leaves a remainder or a fractional coefficient.
    """
    if b.is_zero():
        msg = "Division by the zero polynomial"
        raise ZeroDivisionError(msg)
    try:
        return Polynomial.from_poly(a.poly.exquo(b.poly, auto=False))
    except ExactQuotientFailed as e:
        msg = f"{b} does not divide {a} over the integers"
        raise ValueError(msg) from e


@lru_cache(maxsize=65536)
def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive greatest common divisor with a positive leading coefficient.

    Raises:
        ValueError: If both arguments are zero.
    """
    if p.is_zero() and q.is_zero():
        msg = "gcd(0, 0) is undefined"
        raise ValueError(msg)
    return _normalise(p.poly.gcd(q.poly))


@lru_cache(maxsize=16384)
def squarefree_decomposition(p: Polynomial) -> tuple[tuple[Polynomial, int], ...]:
    """Square-free decomposition over the integers.

    Returns:
        Pairs ``(f_i, i)`` with each ``f_i`` primitive, square-free, of positive
        degree and pairwise coprime, such that ``p`` equals a unit times the
        product of ``f_i^i``, in increasing order of ``i``. Constants
        decompose to the empty tuple.

    Raises:
        ValueError: If ``p`` is zero.
    """
    if p.is_zero():
        msg = "The zero polynomial has no square-free decomposition"
        raise ValueError(msg)
    _, factors = p.poly.sqf_list()
    return tuple((_normalise(f), k) for f, k in factors if f.degree() > 0)


def squarefree_part(p: Polynomial) -> Polynomial:
    """Primitive product of the distinct irreducible factors of ``p``.

    Raises:
        ValueError: If ``p`` is zero.
    """
    if p.is_zero():
        msg = "The zero polynomial has no square-free part"
        raise ValueError(msg)
    return _normalise(p.poly.sqf_part())


@lru_cache(maxsize=16384)
def irreducible_factors(p: Polynomial) -> tuple[Polynomial, ...]:
    """Distinct irreducible factors of positive degree, primitive and positive.

    Raises:
        ValueError: If ``p`` is zero.
    """
    if p.is_zero():
        msg = "The zero polynomial has no factorisation"
        raise ValueError(msg)
    _, factors = p.poly.factor_list()
    return tuple(_normalise(f) for f, _ in factors if f.degree() > 0)


def rational_roots(p: Polynomial) -> list[Fraction]:
    """Distinct rational roots of a nonzero ``p`` in increasing order."""
    return sorted(
        Fraction(-f.coeffs[0], f.coeffs[1])
        for f in irreducible_factors(p)
        if f.degree == 1
    )


@lru_cache(maxsize=16384)
def sturm_sequence(p: Polynomial) -> tuple[Polynomial, ...]:
    """Sturm chain of a square-free polynomial, scaled to integer coefficients.

    Every term is a positive multiple of the chain sympy builds over ``QQ``,
    so sign variations are unchanged.

    Raises:
        ValueError: If ``p`` is zero or not square-free.
    """
    if p.is_zero():
        msg = "Sturm sequence of the zero polynomial"
        raise ValueError(msg)
    if not p.poly.is_sqf:
        msg = f"Polynomial {p} is not square-free"
        raise ValueError(msg)
    chain = []
    for term in p.poly.sturm():
        _, integral = term.clear_denoms(convert=True)
        chain.append(Polynomial.from_poly(integral))
    return tuple(chain)


def sturm_count(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi)``.

    Raises:
        ValueError: If ``p`` is zero, if ``lo >= hi``, or if either endpoint
            is a root.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if p.is_zero():
        msg = "The zero polynomial has infinitely many roots"
        raise ValueError(msg)
    if lo >= hi:
        msg = f"Empty interval ({lo}, {hi})"
        raise ValueError(msg)
    if sign_at(p, lo) == 0 or sign_at(p, hi) == 0:
        msg = f"Interval endpoint is a root of {p}: ({lo}, {hi})"
        raise ValueError(msg)
    return int(p.poly.count_roots(_rational(lo), _rational(hi)))


def owning_factor(p: Polynomial, lo: Fraction, hi: Fraction) -> Polynomial:
    """The irreducible factor of ``p`` whose root ``(lo, hi)`` isolates.

    Raises:
        ValueError: If ``(lo, hi)`` does not isolate a root of ``p``.
    """
    for f in irreducible_factors(p):
        if sturm_count(f, lo, hi) == 1:
            return f
    msg = f"({lo}, {hi}) does not isolate a root of {p}"
    raise ValueError(msg)


def refine_interval(s: Polynomial, lo: Fraction, hi: Fraction) -> Interval:
    """Halve an isolating interval of a square-free ``s``.

    Returns ``(mid, mid)`` when the midpoint is the root itself.
    """
    mid = (lo + hi) / 2
    sm = sign_at(s, mid)
    if sm == 0:
        return mid, mid
    if sign_at(s, lo) != sm:
        return lo, mid
    return mid, hi


def _open_interval(s: Polynomial, lo: Fraction, hi: Fraction) -> Interval:
    # sympy may hand back an interval whose endpoint is a neighbouring exact root
    lo_root, hi_root = sign_at(s, lo) == 0, sign_at(s, hi) == 0
    step = (hi - lo) / 3
    while lo_root or hi_root:
        a = lo + step if lo_root else lo
        b = hi - step if hi_root else hi
        if sign_at(s, a) and sign_at(s, b) and sturm_count(s, a, b) == 1:
            return a, b
        step /= 2
    return lo, hi


def isolate_real_roots(p: Polynomial) -> list[Interval]:
    """Isolate the distinct real roots of ``p``.

    Returns:
        Increasing, pairwise disjoint intervals, one per distinct real root.
        Rational roots are returned as degenerate intervals ``(q, q)``; every
        other interval is open with rational endpoints that are not roots and
        contains exactly one root.

    Raises:
        ValueError: If ``p`` is the zero polynomial.
    """
    if p.is_zero():
        msg = "The zero polynomial has infinitely many roots"
        raise ValueError(msg)
    s = squarefree_part(p)
    if s.degree < 1:
        return []
    exact = rational_roots(s)
    result: list[Interval] = []
    for (a, b), _ in s.poly.intervals():
        lo, hi = _fraction(a), _fraction(b)
        hit = next((r for r in exact if lo == r == hi or lo < r < hi), None)
        if hit is not None:
            result.append((hit, hit))
        else:
            result.append(_open_interval(s, lo, hi))
    logger.debug(f"Isolated {len(result)} real roots of {p}")
    return result
