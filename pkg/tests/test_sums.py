"""Closed forms against direct summation."""

import random
from fractions import Fraction

import pytest

from combident.identities import sums
from combident.identities.catalog import random_ab_pairs
from combident.identities.report import Variant

P, C = Variant.PAPER, Variant.CORRECTED


def test_lhs_inverse_binom_sum_examples():
    assert sums.lhs_inverse_binom_sum(2, 1, 1) == Fraction(5, 2)
    assert sums.lhs_inverse_binom_sum(0, Fraction(3, 7), -4) == 1
    assert sums.lhs_inverse_binom_sum(1, 1, 2) == 3


def test_rockett_examples():
    assert sums.rhs_rockett(0) == 1
    assert sums.rhs_rockett(2) == Fraction(3, 8) * (2 + 2 + Fraction(8, 3)) == Fraction(5, 2)
    # direct sum 1 + 1/5 + 1/10 + 1/10 + 1/5 + 1
    assert sums.rhs_rockett(5) == sums.lhs_inverse_binom_sum(5, 1, 1) == Fraction(13, 5)


def test_eq2_examples():
    assert sums.rhs_eq2(0) == 1
    assert sums.rhs_eq2(2) == 3 * (Fraction(1, 3) + Fraction(1, 4) + Fraction(1, 4))
    for n in range(201):
        assert sums.rhs_eq2(n) == sums.rhs_rockett(n)


def test_rockett_family_exact_range():
    for n in range(301):
        lhs = sums.lhs_inverse_binom_sum(n)
        assert lhs == sums.rhs_rockett(n) == sums.rhs_eq2(n)


def test_general_ab_examples():
    assert sums.rhs_general_ab(1, 1, 1, P) == 2
    assert sums.rhs_general_ab(1, 1, 1, C) == 2
    assert sums.rhs_general_ab(1, 1, 2, C) == 3 == sums.lhs_inverse_binom_sum(1, 1, 2)
    assert sums.rhs_general_ab(1, 1, 2, P) == 6


@pytest.mark.parametrize("a, b", [(0, 1), (1, 0), (2, -2)])
def test_general_ab_rejects_outside_hypotheses(a, b):
    with pytest.raises(ValueError):
        sums.rhs_general_ab(3, a, b)


def test_general_ab_corrected_randomized():
    for a, b in random_ab_pairs(50, seed=0):
        for n in range(61):
            assert sums.lhs_inverse_binom_sum(n, a, b) == sums.rhs_general_ab(n, a, b, C)


def test_general_ab_variants_agree_when_sum_equals_reciprocal_sum():
    # a + b = 1/a + 1/b for a = -2, b = -1/2
    a, b = Fraction(-2), Fraction(-1, 2)
    assert a + b == 1 / a + 1 / b
    for n in range(10):
        assert sums.rhs_general_ab(n, a, b, P) == sums.rhs_general_ab(n, a, b, C)


def test_example2():
    assert (sums.lhs_k_weighted(0), sums.rhs_example2(0)) == (0, 0)
    assert (sums.lhs_k_weighted(1), sums.rhs_example2(1)) == (1, 1)
    assert sums.lhs_k_weighted(2) == sums.rhs_example2(2) == Fraction(5, 2)
    for n in range(201):
        assert sums.lhs_k_weighted(n) == sums.rhs_example2(n)


def test_even_binom_examples():
    assert sums.lhs_even_binom(0) == 1
    assert sums.rhs_even_binom(0, C) == 1
    assert sums.rhs_even_binom(0, P) == Fraction(1, 2)
    assert sums.lhs_even_binom(1) == sums.rhs_even_binom(1, C) == 2
    assert sums.lhs_even_binom(2) == sums.rhs_even_binom(2, C) == Fraction(13, 6)


def test_even_binom_range_and_misprint_structure():
    for n in range(151):
        corrected = sums.rhs_even_binom(n, C)
        assert sums.lhs_even_binom(n) == corrected
        assert sums.rhs_even_binom(n, P) == corrected / 2


def test_prop_mt12_examples():
    assert sums.lhs_inv_binom_pow_sum(1, 1) == 2
    assert sums.rhs_prop_mt12(1, 1, C) == 2
    assert sums.rhs_prop_mt12(1, 1, P) == Fraction(7, 3)
    assert sums.lhs_inv_binom_pow_sum(2, 2) == Fraction(9, 4) == sums.rhs_prop_mt12(2, 2, C)
    for m in (1, 2, 5):
        assert sums.lhs_inv_binom_pow_sum(0, m) == 1 == sums.rhs_prop_mt12(0, m, C)


def test_prop_mt12_corrected_range():
    for m in (1, 2, 3):
        for n in range(41):
            assert sums.lhs_inv_binom_pow_sum(n, m) == sums.rhs_prop_mt12(n, m, C)


def test_corollary1_chain():
    for n in range(61):
        oracle = sums.lhs_inverse_binom_sum(n, 1, 1)
        assert sums.rhs_eq2(n) == sums.rhs_corollary1(n, C) == oracle


def test_beta_alternating_is_beta_integral():
    from combident.polyint import Poly, integrate_interval

    t = Poly.var("t")
    rng = random.Random(2)
    for _ in range(30):
        k, j = rng.randint(0, 12), rng.randint(0, 12)
        assert sums.beta_alternating(k, j) == integrate_interval(t**k * (1 - t) ** j, 0, 1)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        sums.rhs_rockett(-1)
