"""Floating-point cross-checks for the real-parameter integral representations.

Everything here is double precision: a globally adaptive 7/15-point
Gauss-Kronrod integrator, a Lanczos Gamma function, numeric Wallis
integrals, the sin^m generating series, and Monte Carlo over Dirichlet
regions.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .polyint import iter_wallis

__all__ = [
    "QuadratureError",
    "QuadratureResult",
    "DirichletSpec",
    "adaptive_integrate",
    "gamma_real",
    "generalized_binomial",
    "wallis_numeric",
    "wallis_gamma_ratio",
    "SinSeriesResult",
    "sin_series_check",
    "dirichlet_closed_form",
    "dirichlet_mc",
    "RNG_NAME",
]

RNG_NAME = "numpy.PCG64"


class QuadratureError(ArithmeticError):
    """The adaptive scheme could not reach the requested tolerance."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


# Kronrod 15-point nodes (nonnegative half) with Kronrod and embedded Gauss 7-point weights.
_XK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for the odd-indexed Kronrod nodes _XK[1], _XK[3], _XK[5], _XK[7].
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    try:
        return _gk15_raw(f, a, b)
    except (ZeroDivisionError, OverflowError) as exc:
        raise QuadratureError(f"integrand failed on [{a}, {b}]: {exc}") from exc


def _gk15_raw(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(centre)
    kronrod = _WK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        dx = half * _XK[i]
        pair = f(centre - dx) + f(centre + dx)
        kronrod += _WK[i] * pair
        if i % 2 == 1:
            gauss += _WG[i // 2] * pair
    kronrod *= half
    gauss *= half
    if not (math.isfinite(kronrod) and math.isfinite(gauss)):
        raise QuadratureError(f"non-finite integrand values on [{a}, {b}]")
    return kronrod, abs(kronrod - gauss)


def adaptive_integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_intervals: int = 2000,
) -> QuadratureResult:
    """Integrate f over [lo, hi] to absolute tolerance ``tol``.

    Globally adaptive: the subinterval with the largest |K15 - G7| estimate is
    bisected until the summed estimate drops to ``tol``.  Raises
    QuadratureError when ``max_intervals`` is exhausted or an interval becomes
    too narrow to split, which is what happens for unbounded integrands.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if lo == hi:
        return QuadratureResult(0.0, 0.0, 0)
    sign = 1.0
    if hi < lo:
        lo, hi, sign = hi, lo, -1.0
    value, err = _gk15(f, lo, hi)
    evaluations = 15
    heap = [(-err, lo, hi, value)]
    total_value, total_err = value, err
    while total_err > tol:
        if len(heap) >= max_intervals:
            raise QuadratureError(
                f"max subdivisions ({max_intervals}) exceeded: estimate {total_err:.3g} > tol {tol:.3g}"
            )
        neg_err, a, b, v = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not (a < mid < b):
            raise QuadratureError(f"interval [{a}, {b}] cannot be bisected further")
        v1, e1 = _gk15(f, a, mid)
        v2, e2 = _gk15(f, mid, b)
        evaluations += 30
        total_value += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, a, mid, v1))
        heapq.heappush(heap, (-e2, mid, b, v2))
        if len(heap) % 64 == 0:
            # re-sum to stop drift in the running totals
            total_value = math.fsum(item[3] for item in heap)
            total_err = math.fsum(-item[0] for item in heap)
    total_value = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    return QuadratureResult(sign * total_value, total_err, evaluations)


# Lanczos approximation, g = 7, nine coefficients.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def gamma_real(x: float) -> float:
    """Gamma(x) for real x > 0 (relative error about 1e-14 on [0.5, 50])."""
    if not x > 0:
        raise ValueError(f"gamma_real needs x > 0, got {x!r}")
    if x < 0.5:
        return gamma_real(x + 1.0) / x
    z = x - 1.0
    series = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        series += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    # split the power so t**(z+0.5) does not overflow before exp(-t) pulls it back
    half = t ** (0.5 * (z + 0.5))
    return _SQRT_2PI * half * math.exp(-t) * half * series


def generalized_binomial(s: float, r: float) -> float:
    """Gamma(s+1) / (Gamma(r+1) Gamma(s-r+1)) for s, r, s-r > -1."""
    if not (s > -1 and r > -1 and s - r > -1):
        raise ValueError(f"generalized_binomial needs s, r, s-r > -1 (got s={s}, r={r})")
    return gamma_real(s + 1) / (gamma_real(r + 1) * gamma_real(s - r + 1))


def wallis_numeric(p: float, tol: float = 1e-13) -> QuadratureResult:
    """Numerical integral of sin(t)**p over [0, pi/2]."""
    if p < 0:
        raise ValueError("wallis_numeric needs p >= 0")
    return adaptive_integrate(lambda t: math.sin(t) ** p, 0.0, 0.5 * math.pi, tol)


def wallis_gamma_ratio(p: float) -> float:
    """(sqrt(pi)/2) Gamma((p+1)/2) / Gamma(p/2 + 1), the Gamma form of the Wallis integral."""
    return 0.5 * math.sqrt(math.pi) * gamma_real(0.5 * (p + 1)) / gamma_real(0.5 * p + 1)


@dataclass(frozen=True)
class SinSeriesResult:
    a: float
    m: int
    series_value: float
    integral_value: float
    terms: int
    tail_bound: float
    quadrature_error: float
    converged: bool

    @property
    def difference(self) -> float:
        return abs(self.series_value - self.integral_value)


def sin_series_check(a: float, m: int, tol: float = 1e-8, max_terms: int = 5000) -> SinSeriesResult:
    """Compare sum_n a^n (2/sqrt(pi)) W(mn) against (2/sqrt(pi)) int_0^(pi/2) dt / (1 - a sin^m t).

    Wallis values are exact rationals (times pi where even) converted to
    float.  Terms are added until |next term| / (1 - |a|) < tol / 10.
    """
    if abs(a) > 0.9:
        raise ValueError("sin_series_check is limited to |a| <= 0.9")
    if m < 1:
        raise ValueError("m must be a positive integer")
    scale = 2.0 / math.sqrt(math.pi)
    target = tol / 10.0
    exact = iter_wallis()
    w_next = next(exact)  # W(0)
    terms = []
    tail = math.inf
    for n in range(max_terms + 1):
        terms.append(a**n * scale * w_next.to_float())
        for _ in range(m):
            w_next = next(exact)
        tail = abs(a) ** (n + 1) * scale * w_next.to_float() / (1 - abs(a))
        if tail < target:
            break
    converged = tail < target
    series_value = math.fsum(terms)
    quad = adaptive_integrate(lambda t: 1.0 / (1.0 - a * math.sin(t) ** m), 0.0, 0.5 * math.pi, 1e-13)
    return SinSeriesResult(
        a=a,
        m=m,
        series_value=series_value,
        integral_value=scale * quad.value,
        terms=len(terms),
        tail_bound=tail,
        quadrature_error=scale * quad.error_estimate,
        converged=converged,
    )


@dataclass(frozen=True)
class DirichletSpec:
    """Monomial prod x_j^(alpha_j - 1) over {x >= 0, sum (x_i/a_i)^p_i <= 1}."""

    alpha: tuple[float, ...]
    p: tuple[float, ...]
    a: tuple[float, ...]

    def __post_init__(self):
        for name in ("alpha", "p", "a"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        if not (len(self.alpha) == len(self.p) == len(self.a) >= 1):
            raise ValueError("alpha, p and a must have the same positive length")
        if min(self.alpha + self.p + self.a) <= 0:
            raise ValueError("all Dirichlet parameters must be strictly positive")

    @property
    def d(self) -> int:
        return len(self.alpha)


def dirichlet_closed_form(spec: DirichletSpec) -> float:
    """prod a_i^alpha_i / prod p_i * prod Gamma(alpha_i/p_i) / Gamma(1 + sum alpha_i/p_i)."""
    ratios = [al / p for al, p in zip(spec.alpha, spec.p)]
    value = 1.0
    for al, p, a, ratio in zip(spec.alpha, spec.p, spec.a, ratios):
        value *= a**al / p * gamma_real(ratio)
    return value / gamma_real(1.0 + sum(ratios))


def dirichlet_mc(
    spec: DirichletSpec, samples: int = 10**6, seed: int = 0, stream: int = 0, chunk: int = 250_000
) -> QuadratureResult:
    """Monte Carlo estimate by uniform sampling of the box prod [0, a_i].

    ``stream`` selects an independent generator derived from ``seed`` so that
    parallel tasks never share state.  The error estimate is one standard error.
    """
    if samples < 10**4:
        raise ValueError("dirichlet_mc needs at least 10^4 samples")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, stream])))
    a = np.asarray(spec.a)
    p = np.asarray(spec.p)
    expo = np.asarray(spec.alpha) - 1.0
    box = float(np.prod(a))
    total = 0.0
    total_sq = 0.0
    accepted = 0
    done = 0
    while done < samples:
        size = min(chunk, samples - done)
        x = rng.random((size, spec.d)) * a
        inside = np.sum((x / a) ** p, axis=1) <= 1.0
        values = np.where(inside, np.prod(x**expo, axis=1), 0.0)
        total += float(values.sum())
        total_sq += float(np.square(values).sum())
        accepted += int(inside.sum())
        done += size
    if accepted == 0:
        raise QuadratureError("no samples fell inside the Dirichlet region")
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return QuadratureResult(box * mean, box * math.sqrt(var / samples), samples)
