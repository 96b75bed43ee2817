"""Exact Laurent polynomial / rational function arithmetic."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from circlefp.poly import (
    LaurentPolynomial,
    RationalFunction,
    elementary_symmetric,
    elementary_symmetric_all,
    one_minus_t_pow,
)

LP = LaurentPolynomial

polys = st.dictionaries(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LP)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_construction_drops_zero_coefficients():
    p = LP({0: 1, 3: 0, -2: 5})
    assert p.terms() == {0: 1, -2: 5}
    assert LP({1: 0}).is_zero()
    assert LP.zero().is_zero()
    assert LP.one() == 1
    assert LP.monomial(-4, 7).terms() == {-4: 7}


def test_add_examples():
    # (t + 1) + (-1) = t
    assert LP({1: 1, 0: 1}) + LP({0: -1}) == LP({1: 1})
    # additive identity
    p = LP({2: 3, -1: 4})
    assert LP.zero() + p == p
    # like terms
    assert LP({-1: 1}) + LP({-1: 1}) == LP({-1: 2})


def test_mul_examples():
    assert LP({0: 1, 1: -1}) * LP({0: 1, 1: 1}) == LP({0: 1, 2: -1})
    assert LP.monomial(-2) * LP.monomial(3) == LP.monomial(1)
    assert LP({2: 5, -3: 1}) * LP.zero() == LP.zero()


def test_scalar_and_negation():
    p = LP({1: 2, -1: -3})
    assert -p == LP({1: -2, -1: 3})
    assert p * 2 == LP({1: 4, -1: -6})
    assert 0 * p == LP.zero()
    assert p - p == LP.zero()


def test_exponent_queries():
    p = LP({-2: 1, 5: -4})
    assert p.min_exponent() == -2
    assert p.max_exponent() == 5
    assert p.coefficient(5) == -4
    assert p.coefficient(3) == 0
    assert p.content() == 1
    assert LP({0: 6, 2: -9}).content() == 3
    with pytest.raises(ValueError):
        LP.zero().min_exponent()


def test_shift():
    p = LP({0: 1, 1: -1})
    assert p.shift(3) == LP({3: 1, 4: -1})
    assert p.shift(0) == p


@given(polys, polys)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(polys, polys, polys)
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(polys, polys)
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(polys, polys, polys)
def test_mul_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(polys, polys, polys)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


def test_one_minus_t_pow():
    assert one_minus_t_pow(2) == LP({0: 1, 2: -1})
    assert one_minus_t_pow(-1) == LP({0: 1, -1: -1})
    with pytest.raises(ValueError):
        one_minus_t_pow(0)


def test_elementary_symmetric_examples():
    assert elementary_symmetric(0, (7, -3, 2)) == LP.one()
    assert elementary_symmetric(1, (1, -1)) == LP({1: 1, -1: 1})
    assert elementary_symmetric(2, (1, 2, 3)) == LP({3: 1, 4: 1, 5: 1})
    with pytest.raises(ValueError):
        elementary_symmetric(3, (1, 2))
    with pytest.raises(ValueError):
        elementary_symmetric(-1, (1, 2))
    with pytest.raises(ValueError):
        elementary_symmetric_all((1, 0, 2))


@given(st.lists(st.integers(min_value=-6, max_value=6).filter(bool), max_size=5))
def test_elementary_symmetric_against_direct_expansion(ws):
    # Oracle: sigma_i as an explicit sum over i-subsets of the weights.
    sigmas = elementary_symmetric_all(ws)
    assert len(sigmas) == len(ws) + 1
    for i in range(len(ws) + 1):
        expected = LP.zero()
        for combo in itertools.combinations(ws, i):
            expected = expected + LP.monomial(sum(combo))
        assert sigmas[i] == expected


def rf(num_terms, den_terms):
    return RationalFunction(LP(num_terms), LP(den_terms))


def test_rf_normal_form():
    # 1/(1 - t^-1): clear the negative exponent, keep denominator's lowest
    # coefficient positive.
    f = rf({0: 1}, {0: 1, -1: -1})
    assert f.denominator.coefficient(f.denominator.min_exponent()) > 0
    assert min(f.numerator.min_exponent(), f.denominator.min_exponent()) == 0
    # shared integer content is divided out
    g = rf({0: 2, 1: 2}, {0: 4})
    assert g.numerator == LP({0: 1, 1: 1})
    assert g.denominator == LP({0: 2})
    # zero is stored as 0/1
    z = rf({}, {3: 5})
    assert z.is_zero()
    assert z.numerator.is_zero()
    assert z.denominator == LP.one()


@given(polys, nonzero_polys)
def test_rf_normalization_idempotent(num, den):
    f = RationalFunction(num, den)
    again = RationalFunction(f.numerator, f.denominator)
    assert again.numerator.terms() == f.numerator.terms()
    assert again.denominator.terms() == f.denominator.terms()
    if not f.is_zero():
        assert min(f.numerator.min_exponent(), f.denominator.min_exponent()) == 0
        assert math.gcd(f.numerator.content(), f.denominator.content()) == 1
    assert f.denominator.coefficient(f.denominator.min_exponent()) > 0


def test_rf_add_examples():
    # chi^0 of the two-point sphere datum: 1/(1-t) + 1/(1-t^-1) = 1
    f = rf({0: 1}, {0: 1, 1: -1}) + rf({0: 1}, {0: 1, -1: -1})
    assert f == 1
    p_over_q = rf({1: 3}, {0: 1, 2: -1})
    assert p_over_q + RationalFunction.zero() == p_over_q
    assert rf({0: 1}, {0: 1, 1: -1}) + rf({0: -1}, {0: 1, 1: -1}) == 0


@pytest.mark.parametrize("w", [1, 2, 3, 5, -1, -2, -4])
def test_sign_identity(w):
    # 1/(1 - t^-w) + t^w/(1 - t^w) = 0 for every nonzero w
    a = RationalFunction(LP.one(), one_minus_t_pow(-w))
    b = RationalFunction(LP.monomial(w), one_minus_t_pow(w))
    assert (a + b).is_zero()


def test_is_constant_examples():
    assert rf({0: 2, 1: -2}, {0: 1, 1: -1}).is_constant() == 2
    assert rf({1: 1}, {0: 1, 1: -1}).is_constant() is None
    # (1 - t^2)/(1 - t) = 1 + t: proportional only to a non-constant
    assert rf({0: 1, 2: -1}, {0: 1, 1: -1}).is_constant() is None
    assert RationalFunction.zero().is_constant() == 0


def test_non_integer_constant_distinguished():
    f = rf({0: 1, 1: -1}, {0: 2, 1: -2})
    assert f.is_constant() is None
    assert f.constant_ratio() == Fraction(1, 2)
    # whereas a genuinely non-constant function has no ratio at all
    assert rf({1: 1}, {0: 1, 1: -1}).constant_ratio() is None


def test_equality_by_cross_multiplication():
    assert rf({0: 1, 2: -1}, {0: 1, 1: -1}) == rf({0: 1, 1: 1}, {0: 1})
    assert rf({0: 1}, {0: 1, 1: -1}) != rf({0: 1}, {0: 1, 2: -1})
    assert RationalFunction.from_integer(3) == 3


@given(polys, nonzero_polys, nonzero_polys)
def test_common_factor_invisible_to_equality(p, q, r):
    assert RationalFunction(p * r, q * r) == RationalFunction(p, q)


def test_simplify_removes_polynomial_gcd():
    f = rf({0: 1, 2: -1}, {0: 1, 1: -1}).simplify()
    assert f.numerator == LP({0: 1, 1: 1})
    assert f.denominator == LP.one()
    assert hash(rf({0: 1, 2: -1}, {0: 1, 1: -1})) == hash(rf({0: 1, 1: 1}, {0: 1}))


@given(polys, nonzero_polys)
def test_simplify_preserves_value(p, q):
    f = RationalFunction(p, q)
    assert f.simplify() == f


def test_arithmetic_mix():
    half = rf({0: 1}, {0: 1, 1: -1})
    assert half - half == 0
    prod = half * rf({0: 1, 1: -1}, {0: 1})
    assert prod == 1
    assert (-half) + half == 0
