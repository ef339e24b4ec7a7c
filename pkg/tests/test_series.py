import random
from fractions import Fraction

import pytest

from combident.exact import rise_factor
from combident.polyint import Poly
from combident.series import (
    Series,
    TruncationError,
    coefficient,
    geometric,
    mu,
    mul,
    neg_log_one_minus,
    nu,
    shift,
    xr_derivative_r,
)


def rand_series(rng, order):
    return Series([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order + 1)])


def literal_xr_derivative(s: Series, r: int) -> Series:
    """Multiply by x^r and differentiate r times as a polynomial."""
    x = Poly.var("x")
    p = Poly.from_coeffs("x", s.coeffs) * x**r
    for _ in range(r):
        p = p.diff("x")
    coeffs = p.coefficients() + [Fraction(0)] * (s.order + 1)
    return Series(coeffs[: s.order + 1])


def test_geometric():
    assert geometric(1, 3).coeffs == (1, 1, 1, 1)
    assert geometric(2, 3).coeffs == (1, 2, 4, 8)
    assert geometric(Fraction(-1, 2), 2).coeffs == (1, Fraction(-1, 2), Fraction(1, 4))


def test_neg_log_one_minus():
    assert neg_log_one_minus(1, 3).coeffs == (0, 1, Fraction(1, 2), Fraction(1, 3))
    assert neg_log_one_minus(2, 2).coeffs == (0, 2, 2)
    assert neg_log_one_minus(0, 4).coeffs == (0,) * 5


def test_mul_examples():
    assert mul(Series([1, 1]), Series([1, 1])).coeffs == (1, 2)
    assert mul(geometric(1, 5), geometric(1, 5)).coeffs == tuple(range(1, 7))
    s = Series([3, Fraction(1, 2), -1])
    assert mul(s, Series([1, 0, 0])) == s


def test_mul_takes_minimum_order():
    assert mul(geometric(1, 5), geometric(1, 2)).order == 2
    assert (geometric(1, 5) + geometric(1, 3)).order == 3


def test_xr_derivative_examples():
    s = Series([1, 1, 1])
    assert xr_derivative_r(s, 0) == s
    assert xr_derivative_r(s, 1).coeffs == (1, 2, 3)
    assert xr_derivative_r(Series([0, 0, 0, 1]), 2).coeffs[3] == 20


def test_mu_examples():
    assert mu(Series([1, 1, 1, 1])).coeffs == (1, 2, 3, 4)
    assert mu(mu(Series([1, 0, 0]))).coeffs == (1, 0, 0)
    assert mu(mu(Series([0, 0, 1]))).coeffs == (0, 0, 9)


def test_nu_examples():
    s = Series([2, 3, 5])
    assert nu(s, 1) == s
    assert nu(s, 2) == mu(s)
    assert nu(Series([0, 1]), 3).coeffs == (0, 6)
    with pytest.raises(ValueError):
        nu(s, 0)


def test_coefficient_access():
    assert coefficient(geometric(2, 5), 3) == 8
    assert coefficient(neg_log_one_minus(1, 5), 4) == Fraction(1, 4)
    with pytest.raises(TruncationError):
        coefficient(geometric(2, 5), 6)


def test_shift():
    assert shift(Series([1, 2]), 2).coeffs == (0, 0, 1, 2)


def test_constructor_validation():
    with pytest.raises(ValueError):
        Series([1, 2], order=3)
    with pytest.raises(ValueError):
        Series([])


def test_xr_derivative_matches_literal_differentiation():
    rng = random.Random(3)
    for r in range(5):
        for order in range(21):
            s = rand_series(rng, order)
            assert xr_derivative_r(s, r) == literal_xr_derivative(s, r)


def test_operator_relations():
    rng = random.Random(4)
    for _ in range(50):
        s = rand_series(rng, rng.randint(0, 15))
        assert mu(s) == xr_derivative_r(s, 1)
        d = rng.randint(1, 5)
        assert nu(s, d) == xr_derivative_r(s, d - 1)
        assert nu(s, d).coeffs == tuple(rise_factor(n, d - 1) * c for n, c in enumerate(s.coeffs))


def test_mul_commutative_associative():
    rng = random.Random(5)
    for _ in range(1000):
        a, b, c = (rand_series(rng, rng.randint(0, 6)) for _ in range(3))
        assert mul(a, b) == mul(b, a)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))


def test_geometric_product_is_convolution():
    a, b = Fraction(2, 3), Fraction(-5, 2)
    prod = mul(geometric(a, 30), geometric(b, 30))
    for n in range(31):
        assert prod.coeffs[n] == sum(a**k * b ** (n - k) for k in range(n + 1))
