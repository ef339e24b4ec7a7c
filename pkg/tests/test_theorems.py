from fractions import Fraction

import pytest

from combident.exact import binomial, compositions, multinomial
from combident.identities import sums
from combident.identities.sequences import IntegrandSpec, SequenceSpec
from combident.identities.theorems import (
    dirichlet_exact_check,
    random_theorem1_instances,
    theorem1_coefficient_check,
    theorem_geth_check,
    theorem_mt11_check,
)
from combident.polyint import Poly, SimplexSpec
from combident.series import TruncationError

t = Poly.var("t")
ONE = SequenceSpec.constant_one()


class TestSequenceSpec:
    @pytest.mark.parametrize(
        "seq",
        [SequenceSpec.geometric(Fraction(-2, 3)), SequenceSpec.arithmetic_index(), ONE],
    )
    def test_generating_function_matches_terms(self, seq):
        gf = seq.generating_function(12)
        assert list(gf.coeffs) == [seq.term(n) for n in range(13)]

    def test_arithmetic_index_order_zero(self):
        assert SequenceSpec.arithmetic_index().generating_function(0).coeffs == (0,)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            SequenceSpec("fibonacci")


def test_integrand_spec_single_variable():
    with pytest.raises(ValueError):
        IntegrandSpec(t, Poly.var("u"), 0, 1, 0)


def test_theorem1_beta_instance():
    spec = IntegrandSpec(t, 1 - t, 0, 1, 1)
    report = theorem1_coefficient_check(spec, ONE, ONE, 2)
    assert report.passed
    # 3 * (1/3 + 1/6 + 1/3)
    assert report.lhs == report.rhs == Fraction(5, 2) == sums.lhs_inverse_binom_sum(2, 1, 1)


def test_theorem1_degenerate_integrand():
    one = Poly.const(1, ("t",))
    spec = IntegrandSpec(one, one, Fraction(-1, 2), 2, 0)
    a, b = SequenceSpec.geometric(3), SequenceSpec.arithmetic_index()
    for n in range(11):
        report = theorem1_coefficient_check(spec, a, b, n)
        conv = sum(a.term(k) * b.term(n - k) for k in range(n + 1))
        assert report.passed
        assert report.lhs == conv * Fraction(5, 2)


def test_theorem1_example2_generating_function():
    # a_n = n against constant ones over the Beta kernel gives the k-weighted sum
    spec = IntegrandSpec(t, 1 - t, 0, 1, 1)
    for n in range(8):
        report = theorem1_coefficient_check(spec, SequenceSpec.arithmetic_index(), ONE, n)
        assert report.passed and report.lhs == sums.lhs_k_weighted(n)


def test_theorem1_random_instances():
    for spec, a, b, n in random_theorem1_instances(20, seed=11, n_max=25):
        assert theorem1_coefficient_check(spec, a, b, n).passed


def test_theorem1_rejects_insufficient_order():
    spec = IntegrandSpec(t, 1 - t, 0, 1, 1)
    with pytest.raises(TruncationError):
        theorem1_coefficient_check(spec, ONE, ONE, 5, order=3)


def test_random_instances_are_seeded():
    first = random_theorem1_instances(5, seed=9)
    second = random_theorem1_instances(5, seed=9)
    assert [(str(s.p), str(s.q), s.u1, s.u2, s.r, a, b, n) for s, a, b, n in first] == [
        (str(s.p), str(s.q), s.u1, s.u2, s.r, a, b, n) for s, a, b, n in second
    ]


def test_mt11_examples():
    r = theorem_mt11_check(2, 2)
    assert r.passed and r.lhs == Fraction(9, 4)
    r = theorem_mt11_check(3, 3)
    assert r.passed and r.lhs == 1 + Fraction(1, 27) + Fraction(1, 27) + 1 == Fraction(56, 27)


def test_mt11_m1_matches_theorem1():
    spec = IntegrandSpec(t, 1 - t, 0, 1, 1)
    a, b = SequenceSpec.geometric(2), SequenceSpec.geometric(Fraction(1, 3))
    for n in range(8):
        assert theorem_mt11_check(n, 1, a, b).lhs == theorem1_coefficient_check(spec, a, b, n).lhs


def test_mt11_geometric():
    a, b = SequenceSpec.geometric(2), SequenceSpec.geometric(Fraction(-1, 3))
    for m in (1, 2, 3):
        for n in range(12):
            assert theorem_mt11_check(n, m, a, b).passed


def test_mt11_large_n_uses_separable_route():
    report = theorem_mt11_check(30, 3)
    assert report.passed
    assert "separable" in report.note and "box" in report.note


def test_dirichlet_exact_examples():
    r = dirichlet_exact_check(SimplexSpec(2, (1, 1)))
    assert r.passed and r.lhs == Fraction(1, 2)
    r = dirichlet_exact_check(SimplexSpec(3, (0, 0, 0)))
    assert r.passed and r.lhs == 1
    assert dirichlet_exact_check(SimplexSpec(3, (2, 0, 1)), m=3).passed


def test_dirichlet_exact_all_small():
    for d in range(1, 5):
        for total in range(9):
            for alpha in compositions(total, d):
                assert dirichlet_exact_check(SimplexSpec(d, alpha)).passed


def test_geth_examples():
    for n in range(8):
        r = theorem_geth_check(n, 2, 1)
        assert r.passed and r.lhs == sums.rhs_rockett(n)
    r = theorem_geth_check(2, 3, 1)
    # three compositions of type (2,0,0) give 1, three of type (1,1,0) give 1/2
    assert r.passed and r.lhs == 3 * 1 + 3 * Fraction(1, 2) == Fraction(9, 2)
    r = theorem_geth_check(2, 2, 2)
    assert r.passed and r.lhs == Fraction(9, 4) == theorem_mt11_check(2, 2).lhs


def test_geth_enumeration_oracle():
    # brute force over all d-tuples in a box, not the composition generator
    import itertools

    for d, n in [(3, 4), (2, 6)]:
        brute = Fraction(0)
        for alpha in itertools.product(range(n + 1), repeat=d):
            if sum(alpha) == n:
                brute += 1 / multinomial(n, alpha)
        assert theorem_geth_check(n, d, 1).lhs == brute


def test_geth_geometric_sequences():
    seqs = [SequenceSpec.geometric(2), SequenceSpec.geometric(Fraction(-1, 3)), SequenceSpec.geometric(Fraction(1, 2))]
    for m in (1, 2):
        for n in range(8):
            assert theorem_geth_check(n, 3, m, seqs).passed


def test_geth_validation():
    with pytest.raises(ValueError):
        theorem_geth_check(3, 1, 1)
    with pytest.raises(ValueError):
        theorem_geth_check(3, 2, 1, [ONE])


def test_mt11_direct_side_is_plain_sum():
    n, m = 5, 2
    r = theorem_mt11_check(n, m)
    assert r.lhs == sum(1 / binomial(n, k) ** m for k in range(n + 1))
