"""Registry of catalogued identities and the suite driver."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from ..exact import compositions
from ..polyint import SimplexSpec
from . import sums
from .report import IdentityReport, Variant
from .sequences import SequenceSpec
from .theorems import (
    dirichlet_exact_check,
    random_theorem1_instances,
    theorem1_coefficient_check,
    theorem_geth_check,
    theorem_mt11_check,
)

EXACT = "exact"
METHOD = "method"
NUMERIC = "numeric"
UNVERIFIABLE = "unverifiable"

# Grid caps for the theorem-level checks; beyond these the exact work grows too fast for a desk run.
THEOREM1_N_CAP = 25
MT11_N_CAP = 30
GETH_N_CAP = 15
GETH_M_CAP = 2
DIRICHLET_ORDER_CAP = 8


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 50
    m_max: int = 3
    seed: int = 0
    instances: int = 20
    tolerance: float = 1e-9
    samples: int = 10**6


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    summary: str
    runner: Callable[[SuiteConfig], list[IdentityReport]] | None = None
    has_correction: bool = False
    note: str = ""


class UnknownIdentityError(KeyError):
    def __init__(self, name: str, available: Iterable[str]):
        self.name = name
        self.available = sorted(available)
        super().__init__(name)

    def __str__(self):
        label = repr(self.name) if self.name else "an empty name"
        return f"unknown identity {label}; available: {', '.join(self.available)}"


class UnverifiableIdentityError(ValueError):
    pass


def _pair(name, params, lhs, rhs_paper, rhs_corrected, note=""):
    return [
        IdentityReport(name, params, Variant.PAPER, lhs, rhs_paper, note=note, corrected=True),
        IdentityReport(name, params, Variant.CORRECTED, lhs, rhs_corrected, note=note, corrected=True),
    ]


def _run_rockett(cfg):
    return [
        IdentityReport("rockett", {"n": n}, Variant.PAPER, sums.lhs_inverse_binom_sum(n), sums.rhs_rockett(n))
        for n in range(cfg.n_max + 1)
    ]


def _run_eq2(cfg):
    return [
        IdentityReport("eq2", {"n": n}, Variant.PAPER, sums.lhs_inverse_binom_sum(n), sums.rhs_eq2(n))
        for n in range(cfg.n_max + 1)
    ]


def random_ab_pairs(count: int, seed: int) -> list[tuple[Fraction, Fraction]]:
    """Seeded nonzero rational pairs with a + b != 0."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        b = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        if a + b != 0:
            pairs.append((a, b))
    return pairs


def _run_general_ab(cfg):
    out = []
    pairs = [(Fraction(1), Fraction(2))] + random_ab_pairs(50, cfg.seed)
    for a, b in pairs:
        for n in range(cfg.n_max + 1):
            out += _pair(
                "general-ab",
                {"a": a, "b": b, "n": n},
                sums.lhs_inverse_binom_sum(n, a, b),
                sums.rhs_general_ab(n, a, b, Variant.PAPER),
                sums.rhs_general_ab(n, a, b, Variant.CORRECTED),
            )
    return out


def _run_example2(cfg):
    return [
        IdentityReport("k-weighted", {"n": n}, Variant.PAPER, sums.lhs_k_weighted(n), sums.rhs_example2(n))
        for n in range(cfg.n_max + 1)
    ]


def _run_even_binom(cfg):
    out = []
    for n in range(cfg.n_max + 1):
        out += _pair(
            "even-binom",
            {"n": n},
            sums.lhs_even_binom(n),
            sums.rhs_even_binom(n, Variant.PAPER),
            sums.rhs_even_binom(n, Variant.CORRECTED),
        )
    return out


def _run_prop_mt12(cfg):
    out = []
    for m in range(1, cfg.m_max + 1):
        for n in range(cfg.n_max + 1):
            out += _pair(
                "prop-mt12",
                {"m": m, "n": n},
                sums.lhs_inv_binom_pow_sum(n, m),
                sums.rhs_prop_mt12(n, m, Variant.PAPER),
                sums.rhs_prop_mt12(n, m, Variant.CORRECTED),
            )
    return out


def _run_corollary1(cfg):
    out = []
    for n in range(cfg.n_max + 1):
        out += _pair(
            "corollary1",
            {"n": n},
            sums.rhs_eq2(n),
            sums.rhs_corollary1(n, Variant.PAPER),
            sums.rhs_corollary1(n, Variant.CORRECTED),
            note="lhs is the (n+1) sum 1/((n+1-k) 2^k) member",
        )
    return out


def _run_corollary2(cfg):
    out = []
    for n in range(cfg.n_max + 1):
        out += _pair(
            "corollary2",
            {"n": n},
            sums.lhs_inv_binom_pow_sum(n, 2),
            sums.rhs_prop_mt12(n, 2, Variant.PAPER),
            sums.rhs_prop_mt12(n, 2, Variant.CORRECTED),
            note="first equality only",
        )
    return out


def _run_theorem1(cfg):
    n_cap = min(cfg.n_max, THEOREM1_N_CAP)
    return [
        theorem1_coefficient_check(spec, a, b, n)
        for spec, a, b, n in random_theorem1_instances(cfg.instances, cfg.seed, n_cap)
    ]


MT11_SEQUENCES = (
    (SequenceSpec.constant_one(), SequenceSpec.constant_one()),
    (SequenceSpec.geometric(2), SequenceSpec.geometric(Fraction(-1, 3))),
)


def _run_mt11(cfg):
    out = []
    for m in range(1, cfg.m_max + 1):
        for aseq, bseq in MT11_SEQUENCES:
            for n in range(min(cfg.n_max, MT11_N_CAP) + 1):
                out.append(theorem_mt11_check(n, m, aseq, bseq))
    return out


def geth_sequences(d: int) -> list[list[SequenceSpec]]:
    ratios = (Fraction(2), Fraction(-1, 3), Fraction(1, 2))
    return [
        [SequenceSpec.constant_one()] * d,
        [SequenceSpec.geometric(ratios[j]) for j in range(d)],
    ]


def _run_geth(cfg):
    out = []
    for d in (2, 3):
        for m in range(1, min(cfg.m_max, GETH_M_CAP) + 1):
            for seqs in geth_sequences(d):
                for n in range(min(cfg.n_max, GETH_N_CAP) + 1):
                    out.append(theorem_geth_check(n, d, m, seqs))
    return out


def _run_dirichlet_exact(cfg):
    out = []
    for d in range(1, 5):
        for total in range(min(cfg.n_max, DIRICHLET_ORDER_CAP) + 1):
            for alpha in compositions(total, d):
                out.append(dirichlet_exact_check(SimplexSpec(d, alpha)))
    for m in range(2, cfg.m_max + 1):
        out.append(dirichlet_exact_check(SimplexSpec(3, (1, 2, 1)), m))
    return out


def _numeric(name):
    def run(cfg):
        from ..numeric_checks import NUMERIC_RUNNERS

        return NUMERIC_RUNNERS[name](cfg)

    return run


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("rockett", EXACT, "sum_k 1/C(n,k) = (n+1)/2^(n+1) sum_{k=1}^{n+1} 2^k/k", _run_rockett),
        CatalogEntry("eq2", EXACT, "sum_k 1/C(n,k) = (n+1) sum_k 1/((n+1-k) 2^k)", _run_eq2),
        CatalogEntry(
            "general-ab",
            EXACT,
            "sum_k a^k b^(n-k)/C(n,k) in closed form with c = 1/a + 1/b",
            _run_general_ab,
            has_correction=True,
            note="printed weight c^(k-1) should be c^k/(a+b)",
        ),
        CatalogEntry("k-weighted", EXACT, "sum_k k/C(n,k) closed form", _run_example2),
        CatalogEntry(
            "even-binom",
            EXACT,
            "sum_k 1/C(2n,2k) = (2n+1)/2^(2n+1) sum_{k=0}^{2n+1} 2^k/(k+1)",
            _run_even_binom,
            has_correction=True,
            note="printed divisor 2^(2n+2) should be 2^(2n+1)",
        ),
        CatalogEntry(
            "prop-mt12",
            EXACT,
            "sum_k C(n,k)^-m = (n+1)^m sum_k [alternating Beta expansion]^m",
            _run_prop_mt12,
            has_correction=True,
            note="inner sum must run over i <= n-k with C(n-k,i)",
        ),
        CatalogEntry(
            "corollary1",
            EXACT,
            "(n+1) sum_k 1/((n+1-k) 2^k) = (n+1) sum_k alternating inner sum",
            _run_corollary1,
            has_correction=True,
            note="same inner-sum index repair as prop-mt12",
        ),
        CatalogEntry(
            "corollary2",
            EXACT,
            "sum_k C(n,k)^-2 = (n+1)^2 sum_k [alternating inner sum]^2 (first equality)",
            _run_corollary2,
            has_correction=True,
            note="same inner-sum index repair as prop-mt12",
        ),
        CatalogEntry(
            "corollary2-second",
            UNVERIFIABLE,
            "second equality of the C(n,k)^-2 corollary",
            note="unverifiable as printed: summand uses an index i that is never bound",
        ),
        CatalogEntry(
            "sin1-special-values",
            UNVERIFIABLE,
            "closed values of the sin^m series at a = 1 and b > 1 (arctanh forms)",
            note="unverifiable as printed: series and integral diverge, arctanh arguments lie outside (-1, 1)",
        ),
        CatalogEntry(
            "theorem1",
            METHOD,
            "coefficient-level check of the one-dimensional master theorem on seeded random instances",
            _run_theorem1,
        ),
        CatalogEntry("theorem-mt11", METHOD, "C(n,k)^-m weighted convolutions via mu^m", _run_mt11),
        CatalogEntry("theorem-geth", METHOD, "multinomial^-m convolutions via nu_d^m", _run_geth),
        CatalogEntry(
            "dirichlet-exact",
            METHOD,
            "1/multinomial(n; alpha) = (n+d-1)!/n! * simplex integral of x^alpha",
            _run_dirichlet_exact,
        ),
        CatalogEntry("gamma-recurrence", NUMERIC, "Gamma(x+1) = x Gamma(x) on [0.5, 30]", _numeric("gamma-recurrence")),
        CatalogEntry("gamma-exact", NUMERIC, "real Gamma against exact half-integer values", _numeric("gamma-exact")),
        CatalogEntry(
            "eq1-numeric", NUMERIC, "(s+1) int t^r (1-t)^(s-r) = 1/C(s,r) for real s, r", _numeric("eq1-numeric")
        ),
        CatalogEntry("wallis-numeric", NUMERIC, "numeric vs exact Wallis integrals", _numeric("wallis-numeric")),
        CatalogEntry(
            "sin-series",
            NUMERIC,
            "sum a^n W(mn) = int dt/(1 - a sin^m t), |a| <= 0.9",
            _numeric("sin-series"),
        ),
        CatalogEntry(
            "dirichlet-mc", NUMERIC, "Monte Carlo Dirichlet integrals vs Gamma closed form", _numeric("dirichlet-mc")
        ),
    ]
}


def names(kind: str | None = None) -> list[str]:
    return sorted(n for n, e in CATALOG.items() if kind is None or e.kind == kind)


def resolve(selection) -> list[CatalogEntry]:
    if isinstance(selection, str):
        selection = [selection]
    selection = list(selection)
    if not selection:
        raise UnknownIdentityError("", CATALOG)
    entries = []
    for name in selection:
        if name not in CATALOG:
            raise UnknownIdentityError(name, CATALOG)
        entries.append(CATALOG[name])
    return entries


def run_suite(
    selection,
    n_max: int = 50,
    seed: int = 0,
    config: SuiteConfig | None = None,
) -> list[IdentityReport]:
    """Evaluate the selected identities; deterministic given the configuration.

    Unverifiable catalogue entries raise UnverifiableIdentityError.
    """
    cfg = config or SuiteConfig(n_max=n_max, seed=seed)
    reports: list[IdentityReport] = []
    for entry in resolve(selection):
        if entry.runner is None:
            raise UnverifiableIdentityError(f"{entry.name}: {entry.note}")
        reports.extend(entry.runner(cfg))
    return reports
