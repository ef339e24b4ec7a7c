"""Numeric checks wrapped as :class:`IdentityReport` lists for the suite driver."""

from __future__ import annotations

import math

from .exact import gamma_half
from .identities.catalog import SuiteConfig
from .identities.report import IdentityReport, Variant
from .polyint import solid_simplex_monomial, wallis
from .quadrature import (
    RNG_NAME,
    DirichletSpec,
    QuadratureError,
    adaptive_integrate,
    dirichlet_closed_form,
    dirichlet_mc,
    gamma_real,
    generalized_binomial,
    sin_series_check,
    wallis_gamma_ratio,
    wallis_numeric,
)

PI_DOUBLE = 3.14159265358979312

GAMMA_RECURRENCE_TOL = 1e-11
GAMMA_EXACT_TOL = 1e-12
WALLIS_TOL = 1e-10
SIN_SERIES_TOL = 1e-8
MC_SIGMAS = 4.0

EQ1_S_GRID = (0.5, 1.5, 3.25, 7.0)
EQ1_R_STEPS = 8
SIN_SERIES_GRID = tuple((a, m) for a in (0.0, 0.5, -0.5, 0.9) for m in (1, 2, 3))
WALLIS_REAL_GRID = (0.5, 1.5, 2.5, 3.7, 10.25)

DIRICHLET_SPECS = (
    DirichletSpec((1, 1), (1, 1), (1, 1)),
    DirichletSpec((2, 1), (1, 1), (1, 1)),
    DirichletSpec((1, 1, 1), (2, 2, 2), (1, 1, 1)),
)


def _num(name, params, lhs, rhs, tol, note=""):
    return IdentityReport(name, params, Variant.PAPER, float(lhs), float(rhs), note=note, tolerance=tol)


def gamma_recurrence_reports(cfg: SuiteConfig) -> list[IdentityReport]:
    out = []
    for i in range(0, 119):
        x = 0.5 + 0.25 * i
        ratio = x * gamma_real(x) / gamma_real(x + 1)
        out.append(_num("gamma-recurrence", {"x": x}, ratio, 1.0, GAMMA_RECURRENCE_TOL, "x Gamma(x) / Gamma(x+1)"))
    return out


def gamma_exact_reports(cfg: SuiteConfig) -> list[IdentityReport]:
    out = []
    for two_x in range(1, 101):
        exact = gamma_half(two_x).to_float(PI_DOUBLE)
        out.append(
            _num("gamma-exact", {"x": two_x / 2}, gamma_real(two_x / 2) / exact, 1.0, GAMMA_EXACT_TOL, "relative")
        )
    return out


def eq1_grid() -> list[tuple[float, float]]:
    return [(s, s * j / EQ1_R_STEPS) for s in EQ1_S_GRID for j in range(EQ1_R_STEPS + 1)]


def eq1_reports(cfg: SuiteConfig) -> list[IdentityReport]:
    out = []
    for s, r in eq1_grid():
        quad = adaptive_integrate(lambda t: t**r * (1.0 - t) ** (s - r), 0.0, 1.0, 1e-13, max_intervals=5000)
        lhs = (s + 1) * quad.value
        rhs = 1.0 / generalized_binomial(s, r)
        tol = max(cfg.tolerance, (s + 1) * quad.error_estimate)
        out.append(_num("eq1-numeric", {"s": s, "r": r}, lhs, rhs, tol))
    return out


def wallis_reports(cfg: SuiteConfig) -> list[IdentityReport]:
    out = []
    for p in range(41):
        quad = wallis_numeric(p)
        out.append(
            _num(
                "wallis-numeric",
                {"p": p},
                quad.value,
                wallis(p).to_float(PI_DOUBLE),
                max(WALLIS_TOL, quad.error_estimate),
                f"exact {wallis(p)}",
            )
        )
    for p in WALLIS_REAL_GRID:
        quad = wallis_numeric(p)
        out.append(
            _num(
                "wallis-numeric",
                {"p": p},
                quad.value,
                wallis_gamma_ratio(p),
                max(cfg.tolerance, quad.error_estimate),
                "Gamma-ratio form",
            )
        )
    return out


def sin_series_reports(cfg: SuiteConfig) -> list[IdentityReport]:
    out = []
    for a, m in SIN_SERIES_GRID:
        res = sin_series_check(a, m, SIN_SERIES_TOL)
        tol = SIN_SERIES_TOL if res.converged else 0.0
        note = f"{res.terms} terms, tail bound {res.tail_bound:.3g}"
        if not res.converged:
            note += "; series did not converge within the term cap"
        out.append(_num("sin-series", {"a": a, "m": m}, res.series_value, res.integral_value, tol, note))
    return out


def dirichlet_mc_reports(cfg: SuiteConfig) -> list[IdentityReport]:
    out = []
    for stream, spec in enumerate(DIRICHLET_SPECS):
        closed = dirichlet_closed_form(spec)
        note = f"{RNG_NAME} seed={cfg.seed} stream={stream}"
        if all(p == 1 for p in spec.p) and all(a == 1 for a in spec.a) and all(al.is_integer() for al in spec.alpha):
            exact = solid_simplex_monomial([int(al) - 1 for al in spec.alpha])
            note += f"; exact {exact}"
        try:
            est = dirichlet_mc(spec, cfg.samples, cfg.seed, stream)
        except QuadratureError as exc:
            out.append(_num("dirichlet-mc", _spec_params(spec), math.nan, closed, 0.0, str(exc)))
            continue
        out.append(
            _num(
                "dirichlet-mc",
                _spec_params(spec),
                est.value,
                closed,
                MC_SIGMAS * est.error_estimate,
                note + f"; stderr {est.error_estimate:.3g}",
            )
        )
    return out


def _spec_params(spec: DirichletSpec) -> dict:
    return {"alpha": list(spec.alpha), "p": list(spec.p), "a": list(spec.a)}


NUMERIC_RUNNERS = {
    "gamma-recurrence": gamma_recurrence_reports,
    "gamma-exact": gamma_exact_reports,
    "eq1-numeric": eq1_reports,
    "wallis-numeric": wallis_reports,
    "sin-series": sin_series_reports,
    "dirichlet-mc": dirichlet_mc_reports,
}
