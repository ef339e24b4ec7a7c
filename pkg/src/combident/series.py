"""Truncated formal power series in one variable with exact rational coefficients.

A :class:`Series` of order N holds c_0..c_N and nothing beyond; results of
arithmetic carry the smaller order of their operands, and asking for a
coefficient past the order is an error rather than a silent zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Scalar, as_rational, rise_factor


class TruncationError(IndexError):
    """Raised when a coefficient beyond the held truncation order is requested."""


class Series:
    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs: Sequence[Scalar], order: int | None = None):
        coeffs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("a series needs at least the constant coefficient")
        if len(coeffs) != order + 1:
            raise ValueError(f"order {order} needs {order + 1} coefficients, got {len(coeffs)}")
        self.order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0] * (order + 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> Fraction:
        return coefficient(self, n)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return Series(self._coeffs[: order + 1])

    def map_coefficients(self, fn) -> "Series":
        """Apply ``fn(n, c_n)`` to every coefficient."""
        return Series([fn(n, c) for n, c in enumerate(self._coeffs)])

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self._coeffs[i] - other._coeffs[i] for i in range(n + 1)])

    def __neg__(self):
        return Series([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        try:
            q = as_rational(other)
        except TypeError:
            return NotImplemented
        return Series([q * c for c in self._coeffs])

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.order, self._coeffs))

    def __repr__(self):
        return f"Series([{', '.join(str(c) for c in self._coeffs)}])"


def geometric(c: Scalar, order: int) -> Series:
    """1/(1 - c x) truncated at ``order``."""
    c = as_rational(c)
    out = [Fraction(1)]
    for _ in range(order):
        out.append(out[-1] * c)
    return Series(out)


def neg_log_one_minus(c: Scalar, order: int) -> Series:
    """-ln(1 - c x) = sum_{n>=1} c^n x^n / n truncated at ``order``."""
    c = as_rational(c)
    out = [Fraction(0)]
    power = Fraction(1)
    for n in range(1, order + 1):
        power *= c
        out.append(power / n)
    return Series(out)


def from_sequence(terms: Iterable[Scalar], order: int) -> Series:
    terms = list(terms)
    return Series(terms[: order + 1], order)


def shift(s: Series, k: int = 1) -> Series:
    """x^k * s, with the order raised by k (the product is fully known to that order)."""
    return Series([0] * k + list(s.coeffs))


def mul(s: Series, t: Series) -> Series:
    """Cauchy product truncated at min(s.order, t.order)."""
    n = min(s.order, t.order)
    a, b = s.coeffs, t.coeffs
    out = []
    for i in range(n + 1):
        acc = Fraction(0)
        for k in range(i + 1):
            if a[k] and b[i - k]:
                acc += a[k] * b[i - k]
        out.append(acc)
    return Series(out)


def xr_derivative_r(s: Series, r: int) -> Series:
    """d^r/dx^r (x^r s(x)): coefficient n is scaled by (n+r)!/n!."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return s.map_coefficients(lambda n, c: rise_factor(n, r) * c)


def mu(s: Series) -> Series:
    """f -> d/dx (x f): coefficient n is scaled by n+1."""
    return s.map_coefficients(lambda n, c: (n + 1) * c)


def nu(s: Series, d: int) -> Series:
    """f -> d^(d-1)/dx^(d-1) (x^(d-1) f): coefficient n is scaled by (n+d-1)!/n!."""
    if d < 1:
        raise ValueError("nu needs d >= 1")
    return xr_derivative_r(s, d - 1)


def coefficient(s: Series, n: int) -> Fraction:
    if n < 0:
        raise IndexError(f"negative coefficient index {n}")
    if n > s.order:
        raise TruncationError(f"coefficient {n} requested from a series truncated at order {s.order}")
    return s.coeffs[n]
