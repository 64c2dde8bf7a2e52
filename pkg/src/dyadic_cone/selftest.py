"""Invariant suite behind ``dyadic-cone selftest``.

Each check returns a short detail string and raises AssertionError on failure.
``quick`` shrinks the ranges so the whole suite runs in a few seconds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .exact import INFINITY, reduce_mod, v2
from .harmonic import (ConeQuadric, cone_divides_solid_harmonic, gradient_pairing,
                       harmonic_basis, laplacian, multiplier_dimensions, solid_harmonic)
from .holt_ille import h_at_minus2, h_mod, sigma, sigma_table
from .legendre import (assoc_legendre, bonnet_residual, chebyshev_cos_power,
                       cos_power_coeff, divides_P2, integral_form, UniPoly)
from .lifting import dyadic_root, exhaustive_verify, stability_check


@dataclass(frozen=True)
class Sizes:
    legendre_l: int
    equiv_l: int
    odd_l: int
    lowbit_l: int
    v2_l: int
    v2_k: int
    lift_n: int
    stab_n: int
    stab_pairs: int
    harm_d: int
    cone_l: int


FULL = Sizes(40, 60, 200, 1024, 100, 50, 8, 10, 200, 12, 20)
QUICK = Sizes(12, 20, 40, 128, 30, 15, 5, 5, 20, 6, 8)


def check_valuation(sz: Sizes) -> str:
    rng = random.Random(0)
    for _ in range(500):
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        if a and b:
            assert v2(a * b) == v2(a) + v2(b)
        assert v2(a + b) >= min(v2(a), v2(b))
        if v2(a) != v2(b):
            assert v2(a + b) == min(v2(a), v2(b))
    assert v2(0) is INFINITY
    return "500 random pairs"


def check_reduce_homomorphism(sz: Sizes) -> str:
    rng = random.Random(1)
    for _ in range(500):
        a = Fraction(rng.randint(-10**9, 10**9), 2 * rng.randint(0, 10**6) + 1)
        b = Fraction(rng.randint(-10**9, 10**9), 2 * rng.randint(0, 10**6) + 1)
        n = rng.randint(1, 40)
        assert reduce_mod(a + b, n) == reduce_mod(a, n) + reduce_mod(b, n)
        assert reduce_mod(a * b, n) == reduce_mod(a, n) * reduce_mod(b, n)
        assert reduce_mod(a, n + 1).reduce(n) == reduce_mod(a, n)
    return "500 random pairs"


def check_legendre(sz: Sizes) -> str:
    n = 0
    for l in range(sz.legendre_l + 1):
        for m in range(l + 1):
            a = assoc_legendre(l, m)
            assert bonnet_residual(l, m).is_zero(), (l, m)
            a.poly_part.even_part_in_square(a.delta)
            assert integral_form(l, m).is_proportional_to(a.poly_part), (l, m)
            n += 1
    return f"{n} pairs: recurrence, parity, integral form"


def check_division_oracle(sz: Sizes) -> str:
    p2 = UniPoly([-1, 0, 3])
    for l in range(26):
        for m in range(l + 1):
            _, rem = assoc_legendre(l, m).poly_part.divmod(p2)
            assert rem.is_zero() == divides_P2(l, m), (l, m)
    return "l <= 25"


def check_cos_power(sz: Sizes) -> str:
    for n in range(21):
        cheb = chebyshev_cos_power(n)
        for m in range(21):
            a_m = cheb[m] if m < len(cheb) else 0
            expected = a_m if m == 0 else a_m / 2
            assert cos_power_coeff(n, m) == expected, (n, m)
    return "n, m <= 20"


def check_equivalence(sz: Sizes) -> str:
    hits = []
    for l in range(sz.equiv_l + 1):
        for m in range(l + 1):
            d = divides_P2(l, m)
            assert d == h_at_minus2(l, m).is_zero, (l, m)
            if d:
                hits.append((l, m))
    assert hits == [(2, 0), (5, 2)], hits
    return f"l <= {sz.equiv_l}, roots {hits}"


def check_sigma(sz: Sizes) -> str:
    for l in range(sz.v2_l + 1):
        for m in range(l + 1):
            tab = sigma_table(l, m)
            assert tab.ratio_identity_holds()
            assert sum(tab.entries) == h_at_minus2(l, m).exact
            for k in range(min(len(tab), sz.v2_k + 1)):
                assert tab[k] == sigma(l, m, k)
                assert v2(tab[k]) >= v2(factorial(k)), (l, m, k)
    return f"l <= {sz.v2_l}, k <= {sz.v2_k}"


def check_odd_m(sz: Sizes) -> str:
    n = 0
    for l in range(sz.odd_l + 1):
        for m in range(1, l + 1, 2):
            assert h_mod(l, m, 1).value == 1, (l, m)
            n += 1
    return f"{n} pairs"


def check_low_bits(sz: Sizes) -> str:
    for m in (0, 4, 8, 12, 2, 6, 10, 14):
        want = 2 if m % 4 == 0 else 5
        for l in range(m, sz.lowbit_l + 1):
            assert (h_mod(l, m, 3).value == 0) == (l % 8 == want), (l, m)
    return f"l <= {sz.lowbit_l}"


def check_sigma2(sz: Sizes) -> str:
    for l in range(1, sz.odd_l + 1, 4):
        for m in range(2, l + 1, 4):
            if (l - m) // 2 >= 2:
                assert reduce_mod(sigma(l, m, 2), 2).value == 0, (l, m)
    return f"l <= {sz.odd_l}"


def check_lifting(sz: Sizes) -> str:
    for m in range(0, 13, 2):
        for n in range(3, sz.lift_n + 1):
            assert exhaustive_verify(m, n, 1 << (n + 2)).claim_verified, (m, n)
    for m in (0, 2):
        root = dyadic_root(m, 20)
        assert root.residue == (2 if m == 0 else 5)
        assert all(s.q == 0 for s in root.trace[1:])
    root = dyadic_root(4, sz.lift_n + 2)
    for prev, nxt in zip(root.trace, root.trace[1:]):
        assert nxt.residue % (1 << prev.mod_exp) == prev.residue
    return f"m <= 12, N <= {sz.lift_n}"


def check_stability(sz: Sizes) -> str:
    for m in (0, 2, 4, 6):
        for n in range(3, sz.stab_n + 1):
            rep = stability_check(m, n, sz.stab_pairs, seed=n)
            assert rep.passed and not rep.vacuous, (m, n, rep.failures)
    return f"{sz.stab_pairs} pairs per (m, N)"


def check_sigma_stability(sz: Sizes) -> str:
    rng = random.Random(2)
    for _ in range(sz.stab_pairs * 5):
        m = rng.randrange(0, 24, 2)
        n = rng.choice((4, 5, 6))
        k = rng.randint(6, 12)
        parity = 0 if m % 4 == 0 else 1
        l = m + 2 * k + rng.randrange(0, 256)
        l += (l - parity) % 2
        lt = l + (rng.randint(1, 4) << n)
        assert reduce_mod(sigma(l, m, k) - sigma(lt, m, k), n + 1).value == 0, (l, lt, m, k)
    return f"{sz.stab_pairs * 5} samples"


def check_harmonic(sz: Sizes) -> str:
    rng = random.Random(3)
    for d in range(sz.harm_d + 1):
        basis = harmonic_basis(d)
        assert len(basis) == 2 * d + 1
        assert all(laplacian(h).is_zero() for h in basis)
    for b in (Fraction(1), Fraction(2), Fraction(3), Fraction(5, 2)):
        p = ConeQuadric(b).poly
        assert laplacian(p).is_zero()
        for _ in range(3):
            d = rng.randint(0, 5)
            f = sum((h * rng.randint(-3, 3) for h in harmonic_basis(d)), 0 * p)
            assert laplacian(p * f) == gradient_pairing(p, f) * 2
        dims = multiplier_dimensions(b, sz.harm_d)
        third = 2 if b == 1 else 1
        assert dims == {d: (1 if d == 0 else third if d == 3 else 0) for d in dims}, (b, dims)
    return f"d <= {sz.harm_d}"


def check_cone(sz: Sizes) -> str:
    for l in range(sz.cone_l + 1):
        for m in range(l + 1):
            for part in solid_harmonic(l, m):
                assert laplacian(part).is_zero()
                assert part.is_zero() or part.homogeneous_degree() == l
            assert cone_divides_solid_harmonic(l, m) == divides_P2(l, m), (l, m)
    return f"l <= {sz.cone_l}"


CHECKS: list[tuple[str, Callable[[Sizes], str]]] = [
    ("exact.valuation", check_valuation),
    ("exact.reduce_homomorphism", check_reduce_homomorphism),
    ("legendre.construction", check_legendre),
    ("legendre.division_oracle", check_division_oracle),
    ("legendre.cos_power", check_cos_power),
    ("holt_ille.equivalence", check_equivalence),
    ("holt_ille.sigma", check_sigma),
    ("holt_ille.odd_m", check_odd_m),
    ("holt_ille.low_bits", check_low_bits),
    ("holt_ille.sigma2", check_sigma2),
    ("lifting.uniqueness", check_lifting),
    ("lifting.stability", check_stability),
    ("lifting.sigma_stability", check_sigma_stability),
    ("harmonic.multipliers", check_harmonic),
    ("harmonic.cone", check_cone),
]


def run(quick: bool = False):
    """Yield (name, passed, detail) for every check."""
    sz = QUICK if quick else FULL
    for name, fn in CHECKS:
        try:
            detail = fn(sz)
            yield name, True, detail
        except AssertionError as exc:
            yield name, False, f"failed at {exc}"
