"""Sequences with exactly known generating functions, and Theorem-1 integrand data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import Scalar, as_rational
from ..polyint import Poly
from ..series import Series, geometric, mul, shift

GEOMETRIC = "geometric"
ARITHMETIC_INDEX = "arithmetic-index"
CONSTANT_ONE = "constant-one"

KINDS = (GEOMETRIC, ARITHMETIC_INDEX, CONSTANT_ONE)


@dataclass(frozen=True)
class SequenceSpec:
    kind: str
    ratio: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "ratio", as_rational(self.ratio))

    @classmethod
    def geometric(cls, ratio: Scalar) -> "SequenceSpec":
        return cls(GEOMETRIC, as_rational(ratio))

    @classmethod
    def arithmetic_index(cls) -> "SequenceSpec":
        return cls(ARITHMETIC_INDEX)

    @classmethod
    def constant_one(cls) -> "SequenceSpec":
        return cls(CONSTANT_ONE)

    @property
    def description(self) -> str:
        if self.kind == GEOMETRIC:
            return f"a_n = ({self.ratio})^n"
        if self.kind == ARITHMETIC_INDEX:
            return "a_n = n"
        return "a_n = 1"

    def term(self, n: int) -> Fraction:
        if self.kind == GEOMETRIC:
            return self.ratio**n
        if self.kind == ARITHMETIC_INDEX:
            return Fraction(n)
        return Fraction(1)

    def generating_function(self, order: int) -> Series:
        """The ordinary generating function built from series constructors, not from term()."""
        if self.kind == GEOMETRIC:
            return geometric(self.ratio, order)
        if self.kind == CONSTANT_ONE:
            return geometric(1, order)
        # x / (1 - x)^2
        if order == 0:
            return Series([0])
        g = geometric(1, order - 1)
        return shift(mul(g, g))


@dataclass(frozen=True)
class IntegrandSpec:
    """p(t), q(t) on [u1, u2] and the rise order r of f(n,k) = (n+r)!/n! * int p^k q^(n-k)."""

    p: Poly
    q: Poly
    u1: Fraction
    u2: Fraction
    r: int

    def __post_init__(self):
        object.__setattr__(self, "u1", as_rational(self.u1))
        object.__setattr__(self, "u2", as_rational(self.u2))
        names = set(self.p.variables) | set(self.q.variables)
        if len(names) > 1:
            raise ValueError(f"p and q must share one variable, got {sorted(names)}")
        if self.r < 0:
            raise ValueError("r must be nonnegative")

    @property
    def variable(self) -> str:
        return (self.p.variables or self.q.variables or ("t",))[0]
