"""Multivariate polynomials over the rationals and their exact definite integrals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .exact import PiPower, Scalar, as_rational

__all__ = [
    "Poly",
    "SimplexSpec",
    "integrate_interval",
    "integrate_box",
    "integrate_box_separable",
    "integrate_prob_simplex",
    "solid_simplex_monomial",
    "wallis",
    "wallis_values",
    "iter_wallis",
]


class Poly:
    """Polynomial with Fraction coefficients over an ordered tuple of variable names.

    Terms map exponent tuples (one entry per variable) to nonzero coefficients.
    Binary operations between polynomials over different variables work on the
    union of their variables, in order of first appearance.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str] = (), terms: Mapping[tuple, Scalar] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent tuple {exps} does not match variables {variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.variables = variables
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _make(cls, variables: tuple[str, ...], terms: dict) -> "Poly":
        # trusted fast path: exponent tuples valid, coefficients Fractions
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = {e: c for e, c in terms.items() if c}
        return obj

    # construction -------------------------------------------------------

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls((name,), {(1,): 1})

    @classmethod
    def const(cls, c: Scalar, variables: Sequence[str] = ()) -> "Poly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def from_coeffs(cls, name: str, coeffs: Iterable[Scalar]) -> "Poly":
        """Univariate polynomial ``sum coeffs[i] * name**i``."""
        return cls((name,), {(i,): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, var: str | None = None) -> int:
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max(e[i] for e in self._terms)

    def coefficients(self) -> list[Fraction]:
        """Dense coefficient list of a polynomial in at most one variable."""
        if len(self.variables) > 1:
            raise ValueError("coefficients() needs a univariate polynomial")
        if not self._terms:
            return []
        out = [Fraction(0)] * (self.degree() + 1)
        for e, c in self._terms.items():
            out[e[0] if e else 0] = c
        return out

    # variable bookkeeping ----------------------------------------------

    def with_variables(self, variables: Sequence[str]) -> "Poly":
        """Re-express over a superset of the current variables."""
        variables = tuple(variables)
        missing = set(self.variables) - set(variables)
        if missing:
            raise ValueError(f"cannot drop variables {sorted(missing)}")
        idx = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {
            tuple(e[i] if i is not None else 0 for i in idx): c for e, c in self._terms.items()
        }
        return Poly(variables, terms)

    def _aligned(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if self.variables == other.variables:
            return self, other
        union = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(union), other.with_variables(union)

    @staticmethod
    def _lift(value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return Poly.const(as_rational(value))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._aligned(self._lift(other))
        except TypeError:
            return NotImplemented
        terms = dict(a._terms)
        for e, c in b._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly._make(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            return self + (-self._lift(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a, b = self._aligned(self._lift(other))
        except TypeError:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        if len(a.variables) == 1:
            for (e1,), c1 in a._terms.items():
                for (e2,), c2 in b._terms.items():
                    e = (e1 + e2,)
                    terms[e] = terms.get(e, 0) + c1 * c2
        else:
            for e1, c1 in a._terms.items():
                for e2, c2 in b._terms.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    terms[e] = terms.get(e, 0) + c1 * c2
        return Poly._make(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Poly powers must be nonnegative integers")
        result = Poly.const(1, self.variables)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)) and not isinstance(other, bool):
            a, b = self._aligned(self._lift(other))
            return a._terms == b._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # calculus -----------------------------------------------------------

    def diff(self, var: str) -> "Poly":
        if var not in self.variables:
            return Poly(self.variables)
        i = self.variables.index(var)
        terms = {}
        for e, c in self._terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return Poly._make(self.variables, terms)

    def substitute(self, var: str, value) -> "Poly":
        """Replace ``var`` by a polynomial (or rational); ``var`` leaves the variable list."""
        if var not in self.variables:
            return self
        i = self.variables.index(var)
        rest = self.variables[:i] + self.variables[i + 1:]
        if not isinstance(value, Poly) or not any(any(e) for e in value._terms):
            x = value.to_rational() if isinstance(value, Poly) else as_rational(value)
            terms: dict[tuple[int, ...], Fraction] = {}
            for e, c in self._terms.items():
                key = e[:i] + e[i + 1:]
                terms[key] = terms.get(key, 0) + c * x ** e[i]
            return Poly._make(rest, terms)
        value = self._lift(value)
        # group by exponent of var, then Horner-free accumulation with cached powers
        by_power: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for e, c in self._terms.items():
            by_power.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        result = Poly(rest)
        power = Poly.const(1)
        for k in range(max(by_power) + 1 if by_power else 0):
            if k:
                power = power * value
            if k in by_power:
                result = result + Poly._make(rest, by_power[k]) * power
        return result

    def integrate(self, var: str, lower, upper) -> "Poly":
        """Definite integral in ``var`` between polynomial (or rational) limits."""
        if var not in self.variables:
            return self * (self._lift(upper) - self._lift(lower))
        i = self.variables.index(var)
        anti = {}
        for e, c in self._terms.items():
            anti[e[:i] + (e[i] + 1,) + e[i + 1:]] = c / (e[i] + 1)
        antiderivative = Poly._make(self.variables, anti)
        return antiderivative.substitute(var, upper) - antiderivative.substitute(var, lower)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        values = [as_rational(point[v]) for v in self.variables]
        for e, c in self._terms.items():
            term = c
            for x, k in zip(values, e):
                term *= x**k
            total += term
        return total

    def to_rational(self) -> Fraction:
        if any(any(e) for e in self._terms):
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    # display ------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, key=lambda e: (sum(e), e)):
            c = self._terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.variables!r}, {self._terms!r})"


@dataclass(frozen=True)
class SimplexSpec:
    """Exponents of a monomial on the probability simplex x_1 + ... + x_d = 1."""

    d: int
    alpha: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if self.d < 1:
            raise ValueError("simplex dimension d must be >= 1")
        if len(self.alpha) != self.d:
            raise ValueError(f"need {self.d} exponents, got {len(self.alpha)}")
        if any((not isinstance(a, int)) or a < 0 for a in self.alpha):
            raise ValueError(f"exponents must be nonnegative integers, got {self.alpha}")

    @property
    def n(self) -> int:
        return sum(self.alpha)


def integrate_interval(p: Poly, u1: Scalar, u2: Scalar) -> Fraction:
    if len(p.variables) > 1:
        raise ValueError(f"integrate_interval needs a univariate Poly, got variables {p.variables}")
    u1, u2 = as_rational(u1), as_rational(u2)
    total = Fraction(0)
    for e, c in p.terms.items():
        k = (e[0] if e else 0) + 1
        total += c * (u2**k - u1**k) / k
    return total


def integrate_box(p: Poly, bounds: Sequence[tuple[Scalar, Scalar]], order: Sequence[int] | None = None) -> Fraction:
    """Iterated exact integral over a box; ``bounds[i]`` belongs to ``p.variables[i]``.

    ``order`` permutes which variable is integrated first (the result does not
    depend on it; the parameter exists so that can be checked).
    """
    if len(bounds) != len(p.variables):
        raise ValueError(f"{len(bounds)} bounds given for {len(p.variables)} variables")
    order = range(len(bounds)) if order is None else order
    if sorted(order) != list(range(len(bounds))):
        raise ValueError(f"order {list(order)} is not a permutation")
    current = p
    for i in order:
        lo, hi = bounds[i]
        current = current.integrate(p.variables[i], as_rational(lo), as_rational(hi))
    return current.to_rational()


def integrate_box_separable(factors: Sequence[Poly], bounds: Sequence[tuple[Scalar, Scalar]]) -> Fraction:
    """Box integral of a product of univariate factors, one per axis."""
    if len(factors) != len(bounds):
        raise ValueError("one bound pair per factor")
    value = Fraction(1)
    for f, (lo, hi) in zip(factors, bounds):
        value *= integrate_interval(f, lo, hi)
    return value


@lru_cache(maxsize=4096)
def _prob_simplex(alpha: tuple[int, ...]) -> Fraction:
    d = len(alpha)
    if d == 1:
        return Fraction(1)
    names = tuple(f"x{i}" for i in range(1, d))
    integrand = Poly(names, {tuple(alpha[:-1]): 1})
    last = Poly.const(1, names) - sum((Poly.var(v) for v in names), Poly.const(0))
    integrand = integrand * last ** alpha[-1]
    # x1 runs over [0, 1 - x2 - ... - x_{d-1}], then x2 over [0, 1 - x3 - ...], ...
    for i, v in enumerate(names):
        upper = Poly.const(1) - sum((Poly.var(w) for w in names[i + 1:]), Poly.const(0))
        integrand = integrand.integrate(v, 0, upper)
    return integrand.to_rational()


def integrate_prob_simplex(spec: SimplexSpec) -> Fraction:
    """Integral of prod x_i^alpha_i over the probability simplex, by iterated integration.

    The simplex is parametrised by its first d-1 coordinates with
    x_d = 1 - (x_1 + ... + x_{d-1}); the result equals
    prod alpha_i! / (n + d - 1)! though that closed form is never used here.
    """
    return _prob_simplex(spec.alpha)


def solid_simplex_monomial(exponents: Sequence[int]) -> Fraction:
    """Integral of prod x_i^e_i over the solid simplex {x >= 0, sum x <= 1} in len(exponents) variables."""
    return integrate_prob_simplex(SimplexSpec(len(exponents) + 1, tuple(exponents) + (0,)))


def wallis(p: int) -> PiPower:
    """Exact integral of sin(x)**p over [0, pi/2]: rational*pi for even p, rational for odd p."""
    if not isinstance(p, int) or p < 0:
        raise ValueError(f"wallis needs a nonnegative integer, got {p!r}")
    coeff = Fraction(1)
    k = p
    while k >= 2:
        coeff *= Fraction(k - 1, k)
        k -= 2
    return PiPower.pi_power(2, coeff / 2) if k == 0 else PiPower.rational(coeff)


def iter_wallis() -> Iterator[PiPower]:
    """W(0), W(1), W(2), ... by the two-step recurrence."""
    prev2, prev1 = PiPower.pi_power(2, Fraction(1, 2)), PiPower.rational(1)
    yield prev2
    yield prev1
    p = 2
    while True:
        prev2, prev1 = prev1, prev2 * Fraction(p - 1, p)
        yield prev1
        p += 1


def wallis_values(p_max: int) -> list[PiPower]:
    """[W(0), ..., W(p_max)]."""
    return list(itertools.islice(iter_wallis(), p_max + 1))
