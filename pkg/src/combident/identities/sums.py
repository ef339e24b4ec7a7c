"""Direct-summation oracles and closed-form right-hand sides for the inverse binomial identities.

The ``lhs_*`` functions sum the defining expression term by term; they are
the oracles.  The ``rhs_*`` functions evaluate the closed forms.  Where the
printed closed form is wrong, ``variant`` selects the literal printed form or
the repaired one.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact import Scalar, as_rational, binomial
from .report import Variant


def _bad_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


def lhs_inverse_binom_sum(n: int, a: Scalar = 1, b: Scalar = 1) -> Fraction:
    """sum_k a^k b^(n-k) / C(n, k)."""
    _bad_n(n)
    a, b = as_rational(a), as_rational(b)
    return sum((a**k * b ** (n - k) / binomial(n, k) for k in range(n + 1)), Fraction(0))


def rhs_rockett(n: int) -> Fraction:
    _bad_n(n)
    tail = sum((Fraction(2**k, k) for k in range(1, n + 2)), Fraction(0))
    return Fraction(n + 1, 2 ** (n + 1)) * tail


def rhs_eq2(n: int) -> Fraction:
    """(n+1) * sum_k 1 / ((n+1-k) 2^k)."""
    _bad_n(n)
    return (n + 1) * sum((Fraction(1, (n + 1 - k) * 2**k) for k in range(n + 1)), Fraction(0))


def rhs_general_ab(n: int, a: Scalar, b: Scalar, variant: Variant = Variant.CORRECTED) -> Fraction:
    """Closed form of sum_k a^k b^(n-k) / C(n,k), with c = 1/a + 1/b.

    The printed form weights the k-th term by c^(k-1); summing the generating
    function correctly gives weight c^k and an extra overall 1/(a+b).  The two
    agree exactly when a + b = c.
    """
    _bad_n(n)
    a, b = as_rational(a), as_rational(b)
    if a == 0 or b == 0 or a + b == 0:
        raise ValueError(f"need a != 0, b != 0 and a + b != 0 (got a={a}, b={b})")
    c = 1 / a + 1 / b
    variant = Variant(variant)
    if variant is Variant.PAPER:
        tail = sum(((a**k + b**k) * c ** (k - 1) / k for k in range(1, n + 2)), Fraction(0))
        return (n + 1) / c ** (n + 1) * tail
    tail = sum(((a**k + b**k) * c**k / k for k in range(1, n + 2)), Fraction(0))
    return (n + 1) / ((a + b) * c ** (n + 1)) * tail


def lhs_k_weighted(n: int) -> Fraction:
    _bad_n(n)
    return sum((Fraction(k) / binomial(n, k) for k in range(n + 1)), Fraction(0))


def rhs_example2(n: int) -> Fraction:
    _bad_n(n)
    inner = sum(
        (Fraction((n - k) * (n - k - 1)) * Fraction(2) ** (k - 1) / (k + 1) for k in range(n - 1)),
        Fraction(0),
    )
    return ((n + 1) * (2**n - 1) + inner) / 2**n


def lhs_even_binom(n: int) -> Fraction:
    """sum_k 1 / C(2n, 2k)."""
    _bad_n(n)
    return sum((1 / binomial(2 * n, 2 * k) for k in range(n + 1)), Fraction(0))


def rhs_even_binom(n: int, variant: Variant = Variant.CORRECTED) -> Fraction:
    # printed divisor 2^(2n+2) is off by a factor of two
    _bad_n(n)
    divisor = 2 ** (2 * n + 2) if Variant(variant) is Variant.PAPER else 2 ** (2 * n + 1)
    tail = sum((Fraction(2**k, k + 1) for k in range(2 * n + 2)), Fraction(0))
    return Fraction(2 * n + 1, divisor) * tail


def lhs_inv_binom_pow_sum(n: int, m: int) -> Fraction:
    """sum_k C(n,k)^(-m)."""
    _bad_n(n)
    if m < 1:
        raise ValueError("m must be a positive integer")
    return sum((1 / binomial(n, k) ** m for k in range(n + 1)), Fraction(0))


def beta_alternating(k: int, j: int) -> Fraction:
    """int_0^1 t^k (1-t)^j dt expanded as sum_i (-1)^i C(j,i) / (k+1+i)."""
    return sum(
        (Fraction((-1) ** i) * binomial(j, i) / (k + 1 + i) for i in range(j + 1)), Fraction(0)
    )


def rhs_prop_mt12(n: int, m: int, variant: Variant = Variant.CORRECTED) -> Fraction:
    """(n+1)^m sum_k [inner_k]^m.

    The printed inner sum runs over i <= k with C(k, i); the expansion of
    int t^k (1-t)^(n-k) needs i <= n-k with C(n-k, i).
    """
    _bad_n(n)
    if m < 1:
        raise ValueError("m must be a positive integer")
    paper = Variant(variant) is Variant.PAPER
    total = Fraction(0)
    for k in range(n + 1):
        inner = beta_alternating(k, k if paper else n - k)
        total += inner**m
    return (n + 1) ** m * total


def rhs_corollary1(n: int, variant: Variant = Variant.CORRECTED) -> Fraction:
    """(n+1) sum_k (alternating inner sum): the last member of the first corollary chain."""
    return rhs_prop_mt12(n, 1, variant)
