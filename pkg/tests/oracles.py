"""Brute-force reference computations, deliberately sharing no code with the package.

- sigma uses the factorial form (-2)^k k!^2 / (2k+delta)! * C(a,k) C(b,k), not
  the central-binomial form the package uses.
- modular inverses use a hand-written extended Euclid, not pow(x, -1, m).
- P_l^m evaluation goes through Rodrigues' formula on integer coefficient lists.
"""

from fractions import Fraction
from math import comb, factorial


def sigma_factorial(l, m, k):
    a, b, delta = (l - m) // 2, (l + m) // 2, (l - m) % 2
    return Fraction((-2) ** k * factorial(k) ** 2 * comb(a, k) * comb(b, k),
                    factorial(2 * k + delta))


def h_sum(l, m):
    return sum((sigma_factorial(l, m, k) for k in range((l - m) // 2 + 1)), Fraction(0))


def egcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = egcd(b, a % b)
    return g, y, x - (a // b) * y


def inv_mod(a, m):
    g, x, _ = egcd(a % m, m)
    assert g == 1
    return x % m


def reduce_q(q, n):
    q = Fraction(q)
    return q.numerator * inv_mod(q.denominator, 2 ** n) % 2 ** n


def brute_lift(m, r, n, limit=4096):
    """Residues mod 2^(n+1) of the l >= m (l < limit, l = r mod 2^n) with H = 0 mod 2^(n+1)."""
    out = set()
    for l in range(m, limit):
        if l % 2 ** n == r and reduce_q(h_sum(l, m), n + 1) == 0:
            out.add(l % 2 ** (n + 1))
    return out


def rodrigues_coeffs(l):
    """Integer coefficients of 2^l l! P_l = d^l/dx^l (x^2 - 1)^l, lowest degree first."""
    c = [comb(l, j) * (-1) ** (l - j) for j in range(l + 1)]  # in x^2
    poly = [0] * (2 * l + 1)
    for j, v in enumerate(c):
        poly[2 * j] = v
    for _ in range(l):
        poly = [i * poly[i] for i in range(1, len(poly))]
    return poly


def assoc_core_value(l, m, x):
    """d^m/dx^m P_l at rational x, up to the positive constant 2^l l!."""
    poly = rodrigues_coeffs(l)
    for _ in range(m):
        poly = [i * poly[i] for i in range(1, len(poly))]
    return sum((Fraction(c) * Fraction(x) ** i for i, c in enumerate(poly)), Fraction(0))


def chebyshev_coeff(n, m):
    """(1/pi) int_0^pi cos^n cos(m phi) by expanding (e^{i phi} + e^{-i phi})^n / 2^n."""
    # cos^n = 2^-n sum_j C(n,j) e^{i(n-2j) phi}; the integral picks out n-2j = +-m
    total = Fraction(0)
    for j in range(n + 1):
        freq = n - 2 * j
        if abs(freq) == m:
            total += Fraction(comb(n, j), 2 ** n) * (Fraction(1) if m == 0 else Fraction(1, 2))
    return total
