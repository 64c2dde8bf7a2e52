"""Exact associated Legendre functions, used as ground truth for ``P_2 | P_l^m``.

Construction goes through Bonnet's recurrence for ``P_l`` and ``m``-fold
differentiation:

    P_l^m(x) = (1 - x^2)^(m/2) * d^m/dx^m P_l(x)

with no Condon-Shortley sign. For odd ``m`` the stored polynomial part drops
one factor of ``sqrt(1 - x^2)``. Every comparison against other
normalisations is made up to one nonzero rational constant per ``(l, m)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import BadRange
from .exact import NEG_INFINITY, Rational, as_fraction


class UniPoly:
    """Univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: UniPoly) -> tuple[UniPoly, UniPoly]:
        """Euclidean division over Q."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        lead = divisor.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dd] = c
                for j, d in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * d
        return UniPoly(quot), UniPoly(rem[:dd])

    def even_part_in_square(self, offset: int) -> UniPoly:
        """Return E with self(x) == x**offset * E(x**2); raises if the parity is wrong."""
        if any(c for i, c in enumerate(self.coeffs) if (i - offset) % 2):
            raise ValueError("polynomial does not have the requested parity")
        return UniPoly(self.coeffs[offset::2])

    def is_proportional_to(self, other: UniPoly) -> bool:
        """True when self == c * other for some nonzero rational c."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if len(self.coeffs) != len(other.coeffs):
            return False
        ratio = self.coeffs[-1] / other.coeffs[-1]
        return all(a == ratio * b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


@functools.lru_cache(maxsize=None)
def legendre_poly(l: int) -> UniPoly:
    """Legendre polynomial P_l via (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}."""
    if l < 0:
        raise BadRange(f"degree must be non-negative, got {l}")
    if l == 0:
        return UniPoly([1])
    if l == 1:
        return UniPoly.x()
    n = l - 1
    return (UniPoly.x() * legendre_poly(n) * (2 * n + 1)
            - legendre_poly(n - 1) * n) * Fraction(1, n + 1)


@dataclass(frozen=True)
class AssocLegendre:
    """P_l^m with its polynomial part.

    ``core`` is the m-th derivative of P_l; ``poly_part`` is
    ``(1 - x^2)^(m // 2) * core``, i.e. P_l^m itself for even m and
    P_l^m / sqrt(1 - x^2) for odd m.
    """

    l: int
    m: int
    core: UniPoly
    poly_part: UniPoly

    @property
    def delta(self) -> int:
        return (self.l - self.m) % 2


def _check_range(l: int, m: int) -> None:
    if l < 0 or m < 0 or m > l:
        raise BadRange(f"need 0 <= m <= l, got l={l}, m={m}")


@functools.lru_cache(maxsize=4096)
def assoc_legendre(l: int, m: int) -> AssocLegendre:
    _check_range(l, m)
    core = legendre_poly(l)
    for _ in range(m):
        core = core.derivative()
    one_minus_x2 = UniPoly([1, 0, -1])
    return AssocLegendre(l, m, core, one_minus_x2 ** (m // 2) * core)


def divides_P2(l: int, m: int) -> bool:
    """Whether P_2 = (3x^2 - 1)/2 divides the polynomial part of P_l^m.

    Decided by evaluating the even factor E (poly_part = x^delta E(x^2)) at
    x^2 = 1/3, so no irrational number ever appears.
    """
    a = assoc_legendre(l, m)
    even = a.poly_part.even_part_in_square(a.delta)
    return even(Fraction(1, 3)) == 0


def cos_power_coeff(n: int, m: int) -> Fraction:
    """(1/pi) * integral over [0, pi] of cos(phi)^n cos(m phi)."""
    if n < 0 or m < 0:
        raise BadRange("n and m must be non-negative")
    if m > n or (n - m) % 2:
        return Fraction(0)
    return Fraction(comb(n, (n + m) // 2), 2 ** n)


def integral_form(l: int, m: int) -> UniPoly:
    """Polynomial part of the cosine-integral representation of P_l^m.

    Expands (x + y cos phi)^l with y = i sqrt(1 - x^2), integrates each
    power of cos phi with :func:`cos_power_coeff`, and keeps the real
    polynomial left after dividing by sqrt(1 - x^2)^(m mod 2). The front
    factor i^m (l+m)!/l! is dropped; only proportionality is meaningful.
    """
    _check_range(l, m)
    one_minus_x2 = UniPoly([1, 0, -1])
    out = UniPoly()
    for n in range(m, l + 1, 2):
        c = cos_power_coeff(n, m)
        # i^m * y^n = i^(m+n) (1-x^2)^(n/2), and m+n is even
        sign = -1 if ((m + n) // 2) % 2 else 1
        term = UniPoly([0] * (l - n) + [comb(l, n) * c * sign])
        out = out + term * one_minus_x2 ** (n // 2)
    return out


def bonnet_residual(l: int, m: int) -> UniPoly:
    """(l-m+1) P_{l+1}^m - (2l+1) x P_l^m + (l+m) P_{l-1}^m on polynomial parts.

    Zero for every 0 <= m <= l; P_{l-1}^m is taken as 0 when l-1 < m.
    """
    _check_range(l, m)
    nxt = assoc_legendre(l + 1, m).poly_part
    cur = assoc_legendre(l, m).poly_part
    prev = assoc_legendre(l - 1, m).poly_part if l - 1 >= m else UniPoly()
    return nxt * (l - m + 1) - UniPoly.x() * cur * (2 * l + 1) + prev * (l + m)


def chebyshev_cos_power(n: int) -> Sequence[Fraction]:
    """Coefficients a_k with cos(phi)^n = sum_k a_k cos(k phi), by repeated multiplication."""
    coeffs = [Fraction(1)]
    for _ in range(n):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, a in enumerate(coeffs):
            if not a:
                continue
            # cos(phi) cos(k phi) = (cos((k-1) phi) + cos((k+1) phi)) / 2
            nxt[abs(k - 1)] += a / 2
            nxt[k + 1] += a / 2
        coeffs = nxt
    return coeffs
