from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dyadic_cone.errors import EvenDenominator, EvenResidue
from dyadic_cone.exact import (INFINITY, NEG_INFINITY, DyadicResidue, format_rational,
                               parse_rational, reduce_mod, residue_inv, v2)

from oracles import inv_mod, reduce_q

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**9)
dyadic_ints = st.builds(lambda n, d: Fraction(n, 2 * d + 1),
                        st.integers(-10**12, 10**12), st.integers(0, 10**6))


def test_v2_examples():
    assert v2(8) == 3
    assert v2(0) is INFINITY
    assert v2(Fraction(3, 4)) == -2
    assert v2(-12) == 2
    assert v2(Fraction(-5, 7)) == 0


def test_infinity_is_not_finite():
    assert INFINITY > 10**100
    assert not (INFINITY < 5)
    assert min(3, INFINITY) == 3
    assert INFINITY + 4 is INFINITY
    assert INFINITY != 64
    assert NEG_INFINITY < -10**100
    assert str(INFINITY) == "infinite"


def test_reduce_mod_examples():
    # 520/63 mod 16: inverse of 63 is 15 (extended Euclid), 520 * 15 = 7800 = 8 mod 16
    assert inv_mod(63, 16) == 15
    assert reduce_mod(Fraction(520, 63), 4) == DyadicResidue(4, 8)
    assert reduce_mod(1, 3) == DyadicResidue(3, 1)
    assert reduce_mod(-1, 3) == DyadicResidue(3, 7)


def test_reduce_mod_rejects_even_denominator():
    with pytest.raises(EvenDenominator):
        reduce_mod(Fraction(1, 2), 5)


def test_residue_inv_examples():
    assert residue_inv(DyadicResidue(4, 15)) == DyadicResidue(4, 15)
    assert residue_inv(DyadicResidue(3, 3)) == DyadicResidue(3, 3)
    assert residue_inv(DyadicResidue(4, 63)) == DyadicResidue(4, 15)
    with pytest.raises(EvenResidue):
        residue_inv(DyadicResidue(4, 6))


def test_residue_normalises_value():
    r = DyadicResidue(3, -1)
    assert r.value == 7
    assert (r + 2).value == 1
    assert (r * r).value == 1
    assert (-r).value == 1
    with pytest.raises(ValueError):
        DyadicResidue(0, 1)


@given(st.integers(1, 64), st.integers(0, 2**64).map(lambda v: 2 * v + 1))
def test_inverse_then_multiply_is_one(n, odd):
    r = DyadicResidue(n, odd)
    assert (r * residue_inv(r)).value == 1


@given(rationals, rationals)
def test_valuation_is_multiplicative_and_ultrametric(a, b):
    if a and b:
        assert v2(a * b) == v2(a) + v2(b)
    assert v2(a + b) >= min(v2(a), v2(b))
    if v2(a) != v2(b):
        assert v2(a + b) == min(v2(a), v2(b))


@given(dyadic_ints, dyadic_ints, st.integers(1, 80))
def test_reduce_mod_is_ring_homomorphism(a, b, n):
    assert reduce_mod(a + b, n) == reduce_mod(a, n) + reduce_mod(b, n)
    assert reduce_mod(a * b, n) == reduce_mod(a, n) * reduce_mod(b, n)
    assert reduce_mod(a, n).value == reduce_q(a, n)


@given(dyadic_ints, st.integers(1, 80))
def test_reduce_mod_is_compatible_across_levels(a, n):
    assert reduce_mod(a, n + 1).reduce(n) == reduce_mod(a, n)


@pytest.mark.parametrize("q, text", [
    (Fraction(520, 63), "520/63"),
    (Fraction(-25), "-25"),
    (Fraction(0), "0"),
    (Fraction(3, -6), "-1/2"),
])
def test_rational_format(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


@given(rationals)
def test_rational_format_round_trips(q):
    assert parse_rational(format_rational(q)) == q


@pytest.mark.parametrize("bad", ["1.5", "1e3", "abc", "1/0", "1/2/3"])
def test_parse_rational_rejects_non_rationals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)
