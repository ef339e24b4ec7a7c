"""Coefficient-level checks of the generating-function theorems.

Each check computes the n-th coefficient twice: once by summing the defining
weighted convolution term by term, once by building the generating-function
side (integrate the product of the substituted generating functions, then
apply the differential operator) and reading off the coefficient.
"""

from __future__ import annotations

import random
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from ..exact import binomial, compositions, multinomial, rise_factor
from ..polyint import (
    Poly,
    SimplexSpec,
    integrate_box,
    integrate_box_separable,
    integrate_interval,
    integrate_prob_simplex,
)
from ..series import Series, TruncationError, coefficient, mu, nu, xr_derivative_r
from .report import IdentityReport, Variant
from .sequences import IntegrandSpec, SequenceSpec

ONE = SequenceSpec.constant_one()

# Full multivariate box integration is used while the expanded integrand stays small.
_FULL_BOX_TERMS = 400


def theorem1_direct(spec: IntegrandSpec, aseq: SequenceSpec, bseq: SequenceSpec, n: int) -> Fraction:
    """(n+r)!/n! * sum_k a_k b_(n-k) int p^k q^(n-k)."""
    total = Fraction(0)
    for k in range(n + 1):
        weight = aseq.term(k) * bseq.term(n - k)
        if weight:
            total += weight * integrate_interval(spec.p**k * spec.q ** (n - k), spec.u1, spec.u2)
    return rise_factor(n, spec.r) * total


def theorem1_series(spec: IntegrandSpec, aseq: SequenceSpec, bseq: SequenceSpec, order: int) -> Series:
    """d^r/dx^r [x^r int A(x p(t)) B(x q(t)) dt] truncated at ``order``.

    The integrand is carried as a series in x whose coefficients are
    polynomials in t: A(x p) has j-th coefficient A_j p^j.
    """
    t = spec.variable
    A = aseq.generating_function(order).coeffs
    B = bseq.generating_function(order).coeffs
    one = Poly.const(1, (t,))
    pa, pb = [one], [one]
    for _ in range(order):
        pa.append(pa[-1] * spec.p)
        pb.append(pb[-1] * spec.q)
    Ax = [A[j] * pa[j] for j in range(order + 1)]
    Bx = [B[j] * pb[j] for j in range(order + 1)]
    integrated = []
    for i in range(order + 1):
        acc = Poly.const(0, (t,))
        for j in range(i + 1):
            if not Ax[j].is_zero() and not Bx[i - j].is_zero():
                acc = acc + Ax[j] * Bx[i - j]
        integrated.append(integrate_interval(acc.with_variables((t,)), spec.u1, spec.u2))
    return xr_derivative_r(Series(integrated), spec.r)


def theorem1_coefficient_check(
    spec: IntegrandSpec,
    aseq: SequenceSpec,
    bseq: SequenceSpec,
    n: int,
    order: int | None = None,
) -> IdentityReport:
    order = n if order is None else order
    if n > order:
        raise TruncationError(f"series order {order} cannot certify coefficient {n}")
    lhs = theorem1_direct(spec, aseq, bseq, n)
    rhs = coefficient(theorem1_series(spec, aseq, bseq, order), n)
    params = {
        "p": str(spec.p),
        "q": str(spec.q),
        "u1": spec.u1,
        "u2": spec.u2,
        "r": spec.r,
        "a": aseq.description,
        "b": bseq.description,
        "n": n,
    }
    return IdentityReport("theorem1", params, Variant.PAPER, lhs, rhs, note="coefficient of x^n")


def _random_rational(rng: random.Random, num: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _random_poly(rng: random.Random, t: str = "t") -> Poly:
    degree = rng.randint(0, 3)
    coeffs = [_random_rational(rng) for _ in range(degree + 1)]
    if not coeffs[-1]:
        coeffs[-1] = Fraction(1)
    return Poly.from_coeffs(t, coeffs)


def _random_sequence(rng: random.Random) -> SequenceSpec:
    kind = rng.choice(("geometric", "arithmetic-index", "constant-one"))
    if kind == "geometric":
        return SequenceSpec.geometric(_random_rational(rng, 3, 3) or Fraction(1, 2))
    return SequenceSpec(kind)


def random_theorem1_instances(count: int, seed: int, n_max: int = 25):
    """Seeded (spec, aseq, bseq, n) tuples: deg p, q <= 3, endpoints in [-2, 2], r <= 2."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p, q = _random_poly(rng), _random_poly(rng)
        u1 = Fraction(rng.randint(-8, 8), 4)
        u2 = Fraction(rng.randint(-8, 8), 4)
        if u1 == u2:
            u2 = u1 + 1 if u1 < 2 else u1 - 1
        spec = IntegrandSpec(p, q, min(u1, u2), max(u1, u2), rng.randint(0, 2))
        out.append((spec, _random_sequence(rng), _random_sequence(rng), rng.randint(0, n_max)))
    return out


@lru_cache(maxsize=None)
def _beta_box(n: int, k: int, m: int) -> tuple[Fraction, str]:
    """int over [0,1]^m of prod_i t_i^k (1-t_i)^(n-k)."""
    if (n - k + 1) ** m <= _FULL_BOX_TERMS:
        names = tuple(f"t{i}" for i in range(1, m + 1))
        integrand = Poly.const(1, names)
        for v in names:
            tv = Poly.var(v)
            integrand = integrand * tv**k * (1 - tv) ** (n - k)
        return integrate_box(integrand.with_variables(names), [(0, 1)] * m), "box"
    t = Poly.var("t")
    factor = t**k * (1 - t) ** (n - k)
    return integrate_box_separable([factor] * m, [(0, 1)] * m), "separable"


def theorem_mt11_check(
    n: int, m: int, aseq: SequenceSpec = ONE, bseq: SequenceSpec = ONE
) -> IdentityReport:
    """sum_k C(n,k)^-m a_k b_(n-k) against the n-th coefficient of mu^m of the m-fold integral."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    lhs = sum(
        (aseq.term(k) * bseq.term(n - k) / binomial(n, k) ** m for k in range(n + 1)), Fraction(0)
    )
    A = aseq.generating_function(n).coeffs
    B = bseq.generating_function(n).coeffs
    coeffs = []
    routes = set()
    for j in range(n + 1):
        acc = Fraction(0)
        for k in range(j + 1):
            if A[k] and B[j - k]:
                value, route = _beta_box(j, k, m)
                routes.add(route)
                acc += A[k] * B[j - k] * value
        coeffs.append(acc)
    s = Series(coeffs)
    for _ in range(m):
        s = mu(s)
    params = {"n": n, "m": m, "a": aseq.description, "b": bseq.description}
    note = "box integrals: " + "+".join(sorted(routes)) if routes else "no nonzero terms"
    return IdentityReport("theorem-mt11", params, Variant.PAPER, lhs, coefficient(s, n), note=note)


def dirichlet_exact_check(spec: SimplexSpec, m: int = 1) -> IdentityReport:
    """multinomial(n; alpha)^-m against ((n+d-1)!/n! * simplex integral)^m."""
    n = spec.n
    lhs = 1 / multinomial(n, spec.alpha) ** m
    rhs = (rise_factor(n, spec.d - 1) * integrate_prob_simplex(spec)) ** m
    params = {"d": spec.d, "alpha": list(spec.alpha), "m": m}
    return IdentityReport("dirichlet-exact", params, Variant.PAPER, lhs, rhs)


def theorem_geth_check(
    n: int, d: int, m: int, sequences: Sequence[SequenceSpec] | None = None
) -> IdentityReport:
    """Multinomial analogue: sum over compositions of C(n; alpha)^-m prod a^(j), against nu_d^m."""
    if d < 2:
        raise ValueError("theorem_geth_check needs d >= 2")
    if m < 1:
        raise ValueError("m must be a positive integer")
    seqs = list(sequences) if sequences is not None else [ONE] * d
    if len(seqs) != d:
        raise ValueError(f"need {d} sequences, got {len(seqs)}")

    def weight(alpha, terms):
        w = Fraction(1)
        for j, a in enumerate(alpha):
            w *= terms[j](a)
            if not w:
                break
        return w

    direct_terms = [s.term for s in seqs]
    lhs = Fraction(0)
    for alpha in compositions(n, d):
        w = weight(alpha, direct_terms)
        if w:
            lhs += w / multinomial(n, alpha) ** m

    gfs = [s.generating_function(n).coeffs for s in seqs]
    gf_terms = [g.__getitem__ for g in gfs]
    coeffs = []
    for j in range(n + 1):
        acc = Fraction(0)
        for alpha in compositions(j, d):
            w = weight(alpha, gf_terms)
            if w:
                acc += w * integrate_prob_simplex(SimplexSpec(d, alpha)) ** m
        coeffs.append(acc)
    s = Series(coeffs)
    for _ in range(m):
        s = nu(s, d)
    params = {"n": n, "d": d, "m": m, "sequences": "; ".join(x.description for x in seqs)}
    return IdentityReport("theorem-geth", params, Variant.PAPER, lhs, coefficient(s, n))
