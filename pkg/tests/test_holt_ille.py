from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from dyadic_cone.errors import BadRange
from dyadic_cone.exact import DyadicResidue, reduce_mod, v2
from dyadic_cone.holt_ille import h_at_minus2, h_mod, sigma, sigma_table
from dyadic_cone.legendre import divides_P2

from oracles import h_sum, reduce_q, sigma_factorial

# Frozen from tests/oracles.py (factorial form of sigma, summed with Fractions).
SIGMA_CASES = [
    (2, 0, 1, Fraction(-1)),
    (10, 0, 2, Fraction(200, 3)),
    (9, 2, 2, Fraction(4)),
]
H_CASES = [
    (2, 0, Fraction(0)),
    (5, 2, Fraction(0)),
    (10, 0, Fraction(520, 63)),
    (6, 4, Fraction(-4)),
    (4, 1, Fraction(1, 3)),
    (10, 4, Fraction(8)),
    (18, 4, Fraction(48, 13)),
]


def lm_pairs(max_l):
    return st.integers(0, max_l).flatmap(lambda l: st.tuples(st.just(l), st.integers(0, l)))


@pytest.mark.parametrize("l, m, k, expected", SIGMA_CASES)
def test_sigma_examples(l, m, k, expected):
    assert sigma_factorial(l, m, k) == expected
    assert sigma(l, m, k) == expected


@given(lm_pairs(80))
def test_sigma_zero_is_one(lm):
    assert sigma(*lm, 0) == 1


@pytest.mark.parametrize("l, m, table", [
    (2, 0, [1, -1]),
    (5, 2, [1, -1]),
    (0, 0, [1]),
])
def test_sigma_table_examples(l, m, table):
    assert list(sigma_table(l, m).entries) == [Fraction(t) for t in table]


def test_sigma_bad_range():
    with pytest.raises(BadRange):
        sigma(3, 4, 0)
    with pytest.raises(BadRange):
        sigma(10, 0, 6)
    with pytest.raises(BadRange):
        h_at_minus2(1, 2)


@given(lm_pairs(120))
def test_table_matches_closed_form_and_factorial_oracle(lm):
    l, m = lm
    tab = sigma_table(l, m)
    assert len(tab) == (l - m) // 2 + 1
    assert tab.parity_case == ("even" if (l + m) % 2 == 0 else "odd")
    assert tab.ratio_identity_holds()
    for k, s in enumerate(tab.entries):
        assert s == sigma(l, m, k) == sigma_factorial(l, m, k)


@pytest.mark.parametrize("l, m, expected", H_CASES)
def test_h_examples(l, m, expected):
    assert h_sum(l, m) == expected
    assert h_at_minus2(l, m).exact == expected


@given(lm_pairs(150))
def test_h_is_sum_of_table(lm):
    h = h_at_minus2(*lm)
    assert h.exact == sum(h.table.entries)
    assert v2(h.exact) >= 0


@pytest.mark.parametrize("l, m, n, value", [(10, 0, 4, 8), (6, 4, 3, 4), (4, 1, 1, 1)])
def test_h_mod_examples(l, m, n, value):
    assert reduce_q(h_sum(l, m), n) == value
    assert h_mod(l, m, n) == DyadicResidue(n, value)


def test_h_mod_rejects_nonpositive_modulus():
    with pytest.raises(BadRange):
        h_mod(4, 0, 0)


def test_equivalence_with_legendre_oracle():
    roots = []
    for l in range(61):
        for m in range(l + 1):
            d = divides_P2(l, m)
            assert d == h_at_minus2(l, m).is_zero, (l, m)
            if d:
                roots.append((l, m))
    assert roots == [(2, 0), (5, 2)]


def test_sigma_valuation_bound():
    for l in range(101):
        for m in range(l + 1):
            for k, s in enumerate(sigma_table(l, m).entries[:51]):
                assert v2(s) >= v2(factorial(k)), (l, m, k)


def test_odd_m_is_never_a_root_mod_2():
    for l in range(201):
        for m in range(1, l + 1, 2):
            assert h_mod(l, m, 1).value == 1, (l, m)


@pytest.mark.parametrize("m", [0, 4, 8, 12])
def test_low_bits_m_0_mod_4(m):
    for l in range(m, 1025):
        assert (h_mod(l, m, 3).value == 0) == (l % 8 == 2), l


@pytest.mark.parametrize("m", [2, 6, 10, 14])
def test_low_bits_m_2_mod_4(m):
    for l in range(m, 1025):
        assert (h_mod(l, m, 3).value == 0) == (l % 8 == 5), l


@pytest.mark.parametrize("m, l_class, value", [
    (0, 6, 4),  # l = 6 mod 8, 4 | m: H = 4 mod 8
    (2, 1, 4),  # l = 1 mod 8, m = 2 mod 4: H = 4 mod 8
])
def test_ruled_out_classes_mod_8(m, l_class, value):
    for mm in range(m, 30, 4):
        for l in range(l_class, 400, 8):
            if l >= mm:
                assert h_mod(l, mm, 3).value == value, (l, mm)


def test_sigma2_divisible_by_4():
    for l in range(1, 201, 4):
        for m in range(2, l + 1, 4):
            if (l - m) // 2 >= 2:
                assert reduce_mod(sigma(l, m, 2), 2).value == 0, (l, m)
