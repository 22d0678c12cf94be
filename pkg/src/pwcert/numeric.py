"""Floating-point cross-validation of the exact formulas.

Complex Gamma is a Lanczos approximation (g = 7, 9 terms) with the
reflection formula for Re(z) < 0.5; relative accuracy is comfortably below
the 1e-12 target on the right half-plane.  The SL(2,R) c-function is also
evaluated from its defining integral over the opposite unipotent group, so
the Gamma closed form and the quadrature cross-check each other.  Only
ratios of integrals are meaningful: the Haar normalization is not pinned.

Iwasawa data for the integral: the lower unipotent matrix nbar_x =
[[1, 0], [x, 1]] factors as k_theta * a_t * n_u with

    cos(theta) = 1/sqrt(1+x^2),  sin(theta) = -x/sqrt(1+x^2),
    e^t = sqrt(1+x^2),           u = x/(1+x^2),

derived by matching entries and self-checked at import of the integral
path (k*a*n must reproduce nbar_x to 1e-12).  With the rho-shift at 1/2
the integrand of c_n(lambda) becomes

    (1+x^2)^(-lambda-1/2) * ((1-ix)/sqrt(1+x^2))^n,

whose modulus decays like (1+x^2)^(-Re(lambda)-1/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceNotReached, OutsideConvergenceRegion, PoleProximity

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
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

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
_POLE_TOL = 1e-9


def gamma_complex(z: complex) -> complex:
    """Gamma function on the complex plane (Lanczos + reflection)."""
    z = complex(z)
    if abs(z.imag) < _POLE_TOL:
        nearest = round(z.real)
        if nearest <= 0 and abs(z.real - nearest) < _POLE_TOL:
            raise PoleProximity(f"Gamma pole at {nearest} (z = {z})")
    if z.real < 0.5:
        # Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * gamma_complex(1.0 - z))
    z -= 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * t ** (z + 0.5) * cmath.exp(-t) * acc


def c_numeric(group: str, n: int, lam: complex, sigma: int | None = None) -> complex:
    """Closed-form c-function evaluated through the numeric Gamma.

    group "sl2r": (1/sqrt(pi)) Gamma(l) Gamma(l+1/2)
                  / (Gamma(l+(1+n)/2) Gamma(l+(1-n)/2));
    group "sl2c": Gamma((l+sigma)/2) Gamma((l-sigma)/2)
                  / (Gamma((l+n+2)/2) Gamma((l-n)/2)).
    """
    lam = complex(lam)
    if group == "sl2r":
        num = gamma_complex(lam) * gamma_complex(lam + 0.5)
        den = gamma_complex(lam + (1 + n) / 2.0) * gamma_complex(lam + (1 - n) / 2.0)
        return num / den / math.sqrt(math.pi)
    if group == "sl2c":
        if sigma is None:
            raise ValueError("sl2c c-function needs the M-weight sigma")
        num = gamma_complex((lam + sigma) / 2.0) * gamma_complex((lam - sigma) / 2.0)
        den = gamma_complex((lam + n + 2) / 2.0) * gamma_complex((lam - n) / 2.0)
        return num / den
    raise ValueError(f"unknown group {group!r}")


# -- Iwasawa data for the defining integral ----------------------------------------


def iwasawa_nbar(x: float) -> tuple[float, float, float]:
    """Iwasawa coordinates (theta, t, u) of the lower unipotent nbar_x."""
    r2 = 1.0 + x * x
    theta = math.atan2(-x, 1.0)
    t = 0.5 * math.log(r2)
    u = x / r2
    return theta, t, u


def _iwasawa_residual(x: float) -> float:
    """Max entrywise error of k_theta * a_t * n_u against [[1,0],[x,1]]."""
    theta, t, u = iwasawa_nbar(x)
    k = np.array([[math.cos(theta), math.sin(theta)], [-math.sin(theta), math.cos(theta)]])
    a = np.array([[math.exp(t), 0.0], [0.0, math.exp(-t)]])
    n = np.array([[1.0, u], [0.0, 1.0]])
    target = np.array([[1.0, 0.0], [x, 1.0]])
    return float(np.max(np.abs(k @ a @ n - target)))


_iwasawa_validated = False


def _ensure_iwasawa() -> None:
    global _iwasawa_validated
    if _iwasawa_validated:
        return
    worst = max(_iwasawa_residual(x) for x in (-25.0, -3.0, -0.7, 0.0, 0.4, 1.0, 12.0))
    if worst > 1e-12:
        raise AssertionError(f"Iwasawa factorization self-check failed ({worst:.3e})")
    _iwasawa_validated = True


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Gauss-Legendre plan on [-half_width, half_width]."""

    half_width: float
    points: int = 64
    scheme: str = "gauss-legendre-composite"

    def __post_init__(self) -> None:
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.points < 64:
            raise ValueError("at least 64 points per panel are required")

    @staticmethod
    def for_lambda(lam: complex, tol: float = 1e-9, points: int = 64) -> "QuadratureSpec":
        """Pick the truncation from the integrand's power-decay tail bound.

        The two tails together are below tol/10 when
        2 * X^(-2a) / (2a) <= tol/10 with a = Re(lambda).
        """
        a = complex(lam).real
        if a <= 0:
            raise OutsideConvergenceRegion("tail bound needs Re(lambda) > 0")
        half_width = (10.0 / (a * tol)) ** (1.0 / (2.0 * a))
        return QuadratureSpec(half_width=max(10.0, half_width), points=points)


@lru_cache(maxsize=32)
def _leggauss(points: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(points)


def _panel_edges(half_width: float) -> list[float]:
    """Geometric panels 0,1,2,4,... out to the truncation, mirrored."""
    edges = [0.0, min(1.0, half_width)]
    while edges[-1] < half_width:
        edges.append(min(edges[-1] * 2.0, half_width))
    return [-e for e in reversed(edges)] + edges[1:]


def _integrate(n: int, lam: complex, half_width: float, points: int) -> complex:
    nodes, wts = _leggauss(points)
    total = 0.0 + 0.0j
    edges = _panel_edges(half_width)
    for a, b in zip(edges, edges[1:]):
        mid, half = (a + b) / 2.0, (b - a) / 2.0
        x = mid + half * nodes
        log_base = np.log1p(x * x)
        values = np.exp((-lam - 0.5 - n / 2.0) * log_base) * (1.0 - 1j * x) ** n
        total += half * np.sum(wts * values)
    return complex(total)


def c_integral_sl2r(n: int, lam: complex, quad: QuadratureSpec | None = None,
                    tol: float = 1e-9) -> complex:
    """The defining c-function integral for SL(2,R), numerically.

    Only ratios against the n = 0 value are contractually meaningful.  The
    result is accepted only if doubling the per-panel point count moves it
    by at most 10 * tol (relative).
    """
    lam = complex(lam)
    if lam.real <= 0:
        raise OutsideConvergenceRegion(f"Re(lambda) = {lam.real} is not > 0")
    _ensure_iwasawa()
    if quad is None:
        quad = QuadratureSpec.for_lambda(lam, tol=tol)
    coarse = _integrate(n, lam, quad.half_width, quad.points)
    fine = _integrate(n, lam, quad.half_width, 2 * quad.points)
    if abs(fine - coarse) > 10.0 * tol * max(1.0, abs(fine)):
        raise ConvergenceNotReached(
            f"point doubling moved the result by {abs(fine - coarse):.3e}"
        )
    return fine


def verification_report(seed: int = 20240801) -> dict:
    """Cross-check every exact formula numerically; returns a JSON-able report.

    Covers the Gamma recurrence, closed-form c-functions against exact
    quotients for both groups, and integral ratios against exact quotients
    for SL(2,R).
    """
    import random
    from fractions import Fraction

    from .ratfunc import RationalFunction
    from .sl2c import c_quotient_c
    from .sl2r import c_quotient_r

    rng = random.Random(seed)
    report = []

    def add(formula: str, count: int, worst: float) -> None:
        report.append({"formula": formula, "points_tested": count,
                       "max_relative_error": worst})

    # Gamma recurrence |Gamma(z+1) - z Gamma(z)| / |Gamma(z+1)|.
    worst, count = 0.0, 0
    while count < 100:
        z = complex(rng.uniform(-4.0, 6.0), rng.uniform(-6.0, 6.0))
        if min(abs(z - k) for k in range(-6, 2)) < 0.1:
            continue
        worst = max(worst, abs(gamma_complex(z + 1) - z * gamma_complex(z)) / abs(gamma_complex(z + 1)))
        count += 1
    add("gamma-recurrence", count, worst)

    def sample_clear_of(quotient: RationalFunction) -> complex:
        # Zeros and poles of the ladder quotients sit on half-integers.
        singular = [Fraction(j, 2) for j in range(-40, 41)
                    if quotient.num(Fraction(j, 2)) == 0 or quotient.den(Fraction(j, 2)) == 0]
        while True:
            lam = complex(rng.uniform(0.5, 4.0), rng.uniform(-3.0, 3.0))
            if all(abs(lam - complex(float(r))) > 5e-2 for r in singular):
                return lam

    def relerr(numeric: complex, exact: complex) -> float:
        return abs(numeric - exact) / max(1e-300, abs(exact))

    worst, count = 0.0, 0
    for n in range(-8, 9):
        for m in range(-8, 9):
            if (n - m) % 2:
                continue
            quotient = c_quotient_r(n, m)
            for _ in range(2):
                lam = sample_clear_of(quotient)
                numeric = c_numeric("sl2r", n, lam) / c_numeric("sl2r", m, lam)
                worst = max(worst, relerr(numeric, complex(quotient(lam))))
                count += 1
    add("sl2r-c-quotient", count, worst)

    worst, count = 0.0, 0
    for n in range(0, 9):
        for m in range(n % 2, 9, 2):
            quotient = c_quotient_c(n, m)
            sigma = n % 2
            for _ in range(2):
                lam = sample_clear_of(quotient)
                numeric = c_numeric("sl2c", n, lam, sigma=sigma) / c_numeric("sl2c", m, lam, sigma=sigma)
                worst = max(worst, relerr(numeric, complex(quotient(lam))))
                count += 1
    add("sl2c-c-quotient", count, worst)

    worst, count = 0.0, 0
    for lam in (1.0, 2.0, 3.0, 2.0 + 1.0j):
        base = c_integral_sl2r(0, lam, tol=1e-8)
        for n in range(-6, 7, 2):
            exact = complex(c_quotient_r(n, 0)(lam))
            ratio = c_integral_sl2r(n, lam, tol=1e-8) / base
            worst = max(worst, relerr(ratio, exact))
            count += 1
    add("sl2r-c-integral-ratio", count, worst)
    return {"checks": report, "max_relative_error": max(r["max_relative_error"] for r in report)}
