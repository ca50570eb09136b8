"""Exact polynomial arithmetic: construction, evaluation, division."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from certiroot import DivisionByZeroPolynomial, Polynomial, euclid_rem, poly_divmod

rng = random.Random(0xC0FFEE)


def rand_fraction(r, span=50):
    return Fraction(r.randint(-span, span), r.randint(1, span))


def rand_poly(r, max_deg=6, span=50):
    deg = r.randint(0, max_deg)
    coeffs = [rand_fraction(r, span) for _ in range(deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return Polynomial(coeffs)


fraction_st = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=64
)
poly_st = st.lists(fraction_st, min_size=1, max_size=7).map(Polynomial)


# --- construction -----------------------------------------------------------


def test_coeffs_are_fractions_low_to_high():
    p = Polynomial(["-2", 0, 1])
    assert p.coeffs == (Fraction(-2), Fraction(0), Fraction(1))
    assert all(isinstance(c, Fraction) for c in p.coeffs)


def test_trailing_zeros_trimmed():
    assert Polynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])


def test_zero_polynomial_normal_form():
    z = Polynomial([0, 0, 0])
    assert z.is_zero()
    assert z.coeffs == (Fraction(0),)
    assert z.degree is None
    assert z == Polynomial([0])


def test_degree_and_leading():
    p = Polynomial([-2, 0, 1])
    assert p.degree == 2
    assert p.leading == 1
    assert Polynomial([5]).degree == 0


def test_rejects_junk_coefficients():
    with pytest.raises(TypeError):
        Polynomial([0.5, 1])


def test_empty_coefficients_mean_zero():
    assert Polynomial([]).is_zero()


def test_reduced_fractions():
    p = Polynomial([Fraction(2, 4), Fraction(6, 3)])
    assert p.coeffs == (Fraction(1, 2), Fraction(2))


# --- evaluation -------------------------------------------------------------


def test_eval_frozen_values():
    p = Polynomial([-2, 0, 1])  # x^2 - 2
    assert p.eval(0) == -2
    assert p.eval(Fraction(3, 2)) == Fraction(1, 4)
    assert Polynomial([0]).eval(Fraction(7, 3)) == 0


def test_eval_accepts_strings_and_ints():
    p = Polynomial([1, 1])
    assert p.eval("1/2") == Fraction(3, 2)
    assert p.eval(3) == 4


@given(poly_st, poly_st, fraction_st)
def test_eval_is_a_ring_homomorphism(p, q, t):
    assert (p + q).eval(t) == p.eval(t) + q.eval(t)
    assert (p * q).eval(t) == p.eval(t) * q.eval(t)
    assert (-p).eval(t) == -p.eval(t)
    assert (p - q).eval(t) == p.eval(t) - q.eval(t)


# --- derivative -------------------------------------------------------------


def test_derivative_frozen_values():
    assert Polynomial([-2, 0, 1]).derivative() == Polynomial([0, 2])
    assert Polynomial([5]).derivative().is_zero()
    assert Polynomial([0, -1, 0, 3]).derivative() == Polynomial([-1, 0, 9])


def test_derivative_drops_degree_by_one():
    for _ in range(50):
        p = rand_poly(rng)
        if p.degree in (None, 0):
            assert p.derivative().is_zero()
        else:
            assert p.derivative().degree == p.degree - 1


def test_derivative_linearity_and_product_rule():
    for _ in range(30):
        p, q = rand_poly(rng, 4), rand_poly(rng, 4)
        assert (p + q).derivative() == p.derivative() + q.derivative()
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_derivative_difference_quotient():
    """|p(x+h) - p(x)| <= |h| * sup|p'| locally, checked at sample points.

    A crude certified form: for x, x+h in [-1, 1], the mean value theorem
    gives |p(x+h)-p(x)| <= |h| * sum(i*|c_i|) since |p'(t)| <= sum i|c_i|
    on [-1, 1].
    """
    for _ in range(30):
        p = rand_poly(rng, 5, span=8)
        bound = sum(i * abs(c) for i, c in enumerate(p.coeffs))
        x = Fraction(rng.randint(-90, 90), 100)
        h = Fraction(rng.randint(1, 10), 100)
        if abs(x + h) > 1:
            h = -h
        assert abs(p.eval(x + h) - p.eval(x)) <= abs(h) * bound


# --- ring operations --------------------------------------------------------


def test_add_sub_mul_scale_basics():
    p = Polynomial([1, 1])
    q = Polynomial([-1, 1])
    assert p + q == Polynomial([0, 2])
    assert p - q == Polynomial([2])
    assert p * q == Polynomial([-1, 0, 1])
    assert p.scale(Fraction(1, 2)) == Polynomial([Fraction(1, 2), Fraction(1, 2)])
    assert (p - p).is_zero()


def test_mul_degree_adds():
    for _ in range(30):
        p, q = rand_poly(rng, 5), rand_poly(rng, 5)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).degree == p.degree + q.degree


# --- division ---------------------------------------------------------------


def test_divmod_frozen_examples():
    x2m2 = Polynomial([-2, 0, 1])
    twox = Polynomial([0, 2])
    q, r = poly_divmod(x2m2, twox)
    assert q == Polynomial([0, Fraction(1, 2)])
    assert r == Polynomial([-2])
    assert euclid_rem(x2m2, twox) == Polynomial([-2])
    assert euclid_rem(twox, twox).is_zero()
    # degree already smaller: remainder is the dividend itself
    assert euclid_rem(Polynomial([0, 1]), Polynomial([1, 0, 1])) == Polynomial([0, 1])


def test_division_by_zero_polynomial():
    with pytest.raises(DivisionByZeroPolynomial):
        poly_divmod(Polynomial([1, 1]), Polynomial([0]))
    with pytest.raises(DivisionByZeroPolynomial):
        euclid_rem(Polynomial([1]), Polynomial([0, 0]))


def test_division_identity_at_random_points():
    """p = Q*q + R exactly, verified by evaluation at 20 rational points."""
    for _ in range(40):
        p = rand_poly(rng, 6)
        q = rand_poly(rng, 4)
        if q.is_zero():
            continue
        quo, rem = poly_divmod(p, q)
        assert rem.is_zero() or rem.degree < q.degree
        assert quo * q + rem == p
        for _ in range(20):
            t = rand_fraction(rng)
            assert p.eval(t) == quo.eval(t) * q.eval(t) + rem.eval(t)


def test_remainder_of_multiple_is_zero():
    for _ in range(20):
        q = rand_poly(rng, 3)
        f = rand_poly(rng, 3)
        if q.is_zero():
            continue
        assert euclid_rem(q * f, q).is_zero()


# --- value semantics --------------------------------------------------------


def test_hash_and_eq_consistent():
    a = Polynomial([1, 2, 3])
    b = Polynomial(["1", "2", "3"])
    assert a == b and hash(a) == hash(b)
    assert a != Polynomial([1, 2])
    assert a != "not a polynomial"


def test_repr_round_trips():
    p = Polynomial([Fraction(1, 3), -2])
    assert eval(repr(p), {"Polynomial": Polynomial, "Fraction": Fraction}) == p
