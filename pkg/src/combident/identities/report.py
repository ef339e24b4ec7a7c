from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Union


class Variant(str, Enum):
    PAPER = "paper-form"
    CORRECTED = "corrected-form"

    def __str__(self):
        return self.value


PASS = "pass"
FAIL = "fail"
DOCUMENTED_MISPRINT = "documented misprint"

Value = Union[Fraction, float]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of evaluating one identity instance.

    Exact reports pass iff ``lhs == rhs``.  Numeric reports carry a
    ``tolerance`` and pass iff ``|lhs - rhs| <= tolerance``.  ``corrected``
    marks an identity that ships a corrected form, so that a failing
    paper-form instance is a documented misprint rather than a suite failure.
    """

    identity: str
    params: dict[str, Any]
    variant: Variant
    lhs: Value
    rhs: Value
    note: str = ""
    tolerance: float | None = None
    corrected: bool = False
    verdict: str = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.tolerance is None:
            if isinstance(self.lhs, float) or isinstance(self.rhs, float):
                raise TypeError(f"{self.identity}: float values need a tolerance")
            ok = self.lhs == self.rhs
        else:
            diff = abs(float(self.lhs) - float(self.rhs))
            ok = math.isfinite(diff) and diff <= self.tolerance
        object.__setattr__(self, "verdict", PASS if ok else FAIL)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def exact(self) -> bool:
        return self.tolerance is None

    @property
    def status(self) -> str:
        """pass, fail, or documented misprint (a failing paper form that has a correction)."""
        if self.passed:
            return PASS
        if self.variant is Variant.PAPER and self.corrected:
            return DOCUMENTED_MISPRINT
        return FAIL

    def counts_as_failure(self, strict_paper: bool = False) -> bool:
        if self.status == FAIL:
            return True
        return strict_paper and self.status == DOCUMENTED_MISPRINT
