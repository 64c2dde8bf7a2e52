"""Exact rationals, the dyadic valuation, and residues modulo powers of two.

Rationals are plain :class:`fractions.Fraction` objects, which are already
gcd-normalised with a positive denominator.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import EvenDenominator, EvenResidue

Rational = Union[int, Fraction]


@functools.total_ordering
class _Infinity:
    """The valuation of zero. Larger than every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "infinite"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("dyadic_cone.INFINITY")

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return NEG_INFINITY


@functools.total_ordering
class _NegInfinity:
    """Degree of the zero polynomial. Smaller than every integer."""

    def __repr__(self):
        return "NEG_INFINITY"

    def __str__(self):
        return "minus-infinite"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("dyadic_cone.NEG_INFINITY")

    def __lt__(self, other):
        if isinstance(other, int):
            return True
        if other is self:
            return False
        return NotImplemented

    def __neg__(self):
        return INFINITY


INFINITY = _Infinity()
NEG_INFINITY = _NegInfinity()
Valuation = Union[int, _Infinity]


def as_fraction(q: Rational) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"expected int or Fraction, got {type(q).__name__}")


def _v2_int(n: int) -> int:
    # lowest set bit
    return (n & -n).bit_length() - 1


def v2(q: Rational) -> Valuation:
    """Dyadic valuation: v2(8) == 3, v2(Fraction(3, 4)) == -2, v2(0) is INFINITY."""
    q = as_fraction(q)
    if q == 0:
        return INFINITY
    return _v2_int(q.numerator) - _v2_int(q.denominator)


def is_dyadic_integer(q: Rational) -> bool:
    return as_fraction(q).denominator & 1 == 1


@dataclass(frozen=True)
class DyadicResidue:
    """An element of Z/2^N Z, stored as ``value`` in ``[0, 2**mod_exp)``."""

    mod_exp: int
    value: int

    def __post_init__(self):
        if self.mod_exp < 1:
            raise ValueError(f"modulus exponent must be positive, got {self.mod_exp}")
        object.__setattr__(self, "value", self.value % (1 << self.mod_exp))

    @property
    def modulus(self) -> int:
        return 1 << self.mod_exp

    def _coerce(self, other) -> int:
        if isinstance(other, DyadicResidue):
            if other.mod_exp != self.mod_exp:
                raise ValueError("residues with different moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DyadicResidue(self.mod_exp, self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DyadicResidue(self.mod_exp, self.value - o)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return DyadicResidue(self.mod_exp, self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return DyadicResidue(self.mod_exp, -self.value)

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> DyadicResidue:
        return residue_inv(self)

    def reduce(self, mod_exp: int) -> DyadicResidue:
        """Project onto a smaller modulus 2^mod_exp."""
        if mod_exp > self.mod_exp:
            raise ValueError("cannot reduce to a larger modulus")
        return DyadicResidue(mod_exp, self.value)

    def __str__(self):
        return f"{self.value} (mod 2^{self.mod_exp})"


def residue_inv(r: DyadicResidue) -> DyadicResidue:
    if r.value & 1 == 0:
        raise EvenResidue(f"{r} is not invertible")
    return DyadicResidue(r.mod_exp, pow(r.value, -1, r.modulus))


def reduce_mod(q: Rational, mod_exp: int) -> DyadicResidue:
    """Image of a dyadic integer in Z/2^mod_exp Z."""
    q = as_fraction(q)
    if q.denominator & 1 == 0:
        raise EvenDenominator(f"{format_rational(q)} has even denominator")
    m = 1 << mod_exp
    return DyadicResidue(mod_exp, q.numerator * pow(q.denominator, -1, m))


def format_rational(q: Rational) -> str:
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or a decimal integer. Floats are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an integer or num/den rational: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)
