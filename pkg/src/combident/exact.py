"""Exact scalar arithmetic and combinatorial primitives.

Every exact computation in the package bottoms out here.  Rationals are
:class:`fractions.Fraction` (always stored in lowest terms with a positive
denominator); :class:`PiPower` extends them to finite sums ``sum q_k * pi**(k/2)``
so that Gamma values at half-integers and Wallis integrals stay exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: silently importing binary rounding error would defeat
    the point of exact verification.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial needs n >= 0")
    return Fraction(math.factorial(n))


def binomial(n: int, k: int) -> Fraction:
    """C(n, k), or 0 when k lies outside [0, n]."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def multinomial(n: int, parts: Sequence[int]) -> Fraction:
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be nonnegative, got {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    value = math.factorial(n)
    for p in parts:
        value //= math.factorial(p)
    return Fraction(value)


def rise_factor(n: int, r: int) -> Fraction:
    """(n+r)!/n! = (n+1)(n+2)...(n+r)."""
    if n < 0 or r < 0:
        raise ValueError("rise_factor needs n, r >= 0")
    value = 1
    for j in range(n + 1, n + r + 1):
        value *= j
    return Fraction(value)


class PiPower:
    """Exact value ``sum_k q_k * pi**(k/2)`` with rational ``q_k``.

    Distinct half-powers are kept apart (they are linearly independent over
    the rationals), so equality is structural.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        for k, q in (terms or {}).items():
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"half-power index must be a nonnegative int, got {k!r}")
            q = as_rational(q)
            if q:
                clean[k] = clean.get(k, Fraction(0)) + q
        self._terms = tuple(sorted((k, q) for k, q in clean.items() if q))

    @classmethod
    def rational(cls, q: Scalar) -> "PiPower":
        return cls({0: q})

    @classmethod
    def pi_power(cls, half_power: int, q: Scalar = 1) -> "PiPower":
        """``q * pi**(half_power/2)``."""
        return cls({half_power: q})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_rational(self) -> bool:
        return all(k == 0 for k, _ in self._terms)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms[0][1] if self._terms else Fraction(0)

    def to_float(self, pi: float = math.pi) -> float:
        root = math.sqrt(pi)
        return math.fsum(float(q) * root**k for k, q in self._terms)

    __float__ = to_float

    @staticmethod
    def _coerce(other) -> "PiPower":
        if isinstance(other, PiPower):
            return other
        return PiPower.rational(as_rational(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        merged = dict(self._terms)
        for k, q in other._terms:
            merged[k] = merged.get(k, Fraction(0)) + q
        return PiPower(merged)

    __radd__ = __add__

    def __neg__(self):
        return PiPower({k: -q for k, q in self._terms})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        product: dict[int, Fraction] = {}
        for k1, q1 in self._terms:
            for k2, q2 in other._terms:
                product[k1 + k2] = product.get(k1 + k2, Fraction(0)) + q1 * q2
        return PiPower(product)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Only division by a rational or a single pi-power term is closed.
        other = self._coerce(other)
        if not other._terms:
            raise ZeroDivisionError("PiPower division by zero")
        if len(other._terms) != 1:
            raise ValueError("division by a multi-term PiPower is not representable")
        (k, q), = other._terms
        if any(kk < k for kk, _ in self._terms):
            raise ValueError("result would need a negative power of pi")
        return PiPower({kk - k: qq / q for kk, qq in self._terms})

    def __eq__(self, other):
        if isinstance(other, PiPower):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == PiPower.rational(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"PiPower({dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, q in self._terms:
            if k == 0:
                parts.append(str(q))
            else:
                factor = "pi" if k == 2 else f"pi^({k}/2)" if k % 2 else f"pi^{k // 2}"
                parts.append(factor if q == 1 else f"({q})*{factor}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def gamma_half(two_x: int) -> PiPower:
    """Exact Gamma(two_x / 2) for a positive integer two_x.

    Integer arguments give (x-1)!; half-integers give a rational multiple of
    sqrt(pi) built from Gamma(1/2) = sqrt(pi) and Gamma(z+1) = z Gamma(z).
    """
    if not isinstance(two_x, int) or two_x < 1:
        raise ValueError(f"gamma_half needs a positive integer, got {two_x!r}")
    if two_x % 2 == 0:
        return PiPower.rational(factorial(two_x // 2 - 1))
    coeff = Fraction(1)
    for numerator in range(1, two_x - 1, 2):  # z = 1/2, 3/2, ..., (two_x-2)/2
        coeff *= Fraction(numerator, 2)
    return PiPower.pi_power(1, coeff)


def compositions(n: int, parts: int) -> Iterable[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to n, lexicographic."""
    if parts < 1:
        raise ValueError("need at least one part")
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest
