"""Coefficients sigma_l^m(k) of H_l^m and the value H_l^m(-2).

With a = floor((l-m)/2), b = floor((l+m)/2) and delta = (l+m) mod 2,

    sigma_l^m(k) = (-2)^k C(a,k) C(b,k) / (C(2k,k) * (2k+1)^delta)

and H_l^m(z) = sum_k (-z/2)^k sigma_l^m(k), so H_l^m(-2) is the plain sum of
the sigma values. P_2 divides P_l^m exactly when that sum is zero.

Residues mod 2^N are always taken from the exact rational value. The ratio
recurrence divides by even numbers, so it cannot be run inside Z/2^N Z.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BadRange, EvenDenominator
from .exact import DyadicResidue, reduce_mod


def _check(l: int, m: int) -> None:
    if not (0 <= m <= l):
        raise BadRange(f"need 0 <= m <= l, got l={l}, m={m}")


def _params(l: int, m: int) -> tuple[int, int, int]:
    return (l - m) // 2, (l + m) // 2, (l + m) % 2


def _ratio(a: int, b: int, odd: int, k: int) -> Fraction:
    """sigma(k+1) / sigma(k)."""
    return Fraction(-(a - k) * (b - k), (k + 1) * (2 * k + 1 + 2 * odd))


def sigma(l: int, m: int, k: int) -> Fraction:
    """Closed-form sigma_l^m(k) from binomials.

    Independent of :func:`sigma_table`, which uses the ratio recurrence.
    """
    _check(l, m)
    a, b, odd = _params(l, m)
    if not (0 <= k <= a):
        raise BadRange(f"need 0 <= k <= {a}, got k={k}")
    den = comb(2 * k, k) * (2 * k + 1 if odd else 1)
    return Fraction((-2) ** k * comb(a, k) * comb(b, k), den)


@dataclass(frozen=True)
class SigmaTable:
    l: int
    m: int
    entries: tuple[Fraction, ...]

    @property
    def parity_case(self) -> str:
        return "even" if (self.l + self.m) % 2 == 0 else "odd"

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def ratio_identity_holds(self) -> bool:
        """Every consecutive pair obeys the ratio recurrence, denominators cleared."""
        a, b, odd = _params(self.l, self.m)
        for k in range(len(self.entries) - 1):
            lhs = self.entries[k + 1] * (k + 1) * (2 * k + 1 + 2 * odd)
            rhs = -self.entries[k] * (a - k) * (b - k)
            if lhs != rhs:
                return False
        return True


@functools.lru_cache(maxsize=1024)
def sigma_table(l: int, m: int) -> SigmaTable:
    _check(l, m)
    a, b, odd = _params(l, m)
    entries = [Fraction(1)]
    for k in range(a):
        entries.append(entries[-1] * _ratio(a, b, odd, k))
    return SigmaTable(l, m, tuple(entries))


def _split_sum(a: int, b: int, odd: int, i: int, j: int) -> tuple[int, int, int]:
    """Binary splitting of sum_{k=i}^{j-1} prod_{t=i}^{k-1} ratio(t).

    Returns integers (P, Q, T): P/Q is the full product of ratios over
    [i, j) and T/Q is the partial sum.
    """
    if j - i == 1:
        q = (i + 1) * (2 * i + 1 + 2 * odd)
        return -(a - i) * (b - i), q, q
    mid = (i + j) // 2
    p1, q1, t1 = _split_sum(a, b, odd, i, mid)
    p2, q2, t2 = _split_sum(a, b, odd, mid, j)
    return p1 * p2, q1 * q2, t1 * q2 + p1 * t2


@functools.lru_cache(maxsize=8192)
def _h_exact(l: int, m: int) -> Fraction:
    # Same ratio recurrence as sigma_table, summed by binary splitting so that
    # only one gcd is taken on the final numerator and denominator.
    a, b, odd = _params(l, m)
    _, q, t = _split_sum(a, b, odd, 0, a + 1)
    return Fraction(t, q)


@dataclass(frozen=True)
class HValue:
    """H_l^m(-2) as an exact rational; the sigma table is built on demand."""

    l: int
    m: int
    exact: Fraction

    @functools.cached_property
    def table(self) -> SigmaTable:
        return sigma_table(self.l, self.m)

    @property
    def is_zero(self) -> bool:
        return self.exact == 0


def h_at_minus2(l: int, m: int) -> HValue:
    _check(l, m)
    return HValue(l, m, _h_exact(l, m))


def h_mod(l: int, m: int, mod_exp: int) -> DyadicResidue:
    """H_l^m(-2) reduced mod 2^mod_exp."""
    if mod_exp < 1:
        raise BadRange(f"modulus exponent must be >= 1, got {mod_exp}")
    h = h_at_minus2(l, m).exact
    try:
        return reduce_mod(h, mod_exp)
    except EvenDenominator as exc:
        raise AssertionError(f"H_{l}^{m}(-2) is not a dyadic integer") from exc
