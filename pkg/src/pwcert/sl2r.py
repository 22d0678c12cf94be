"""SL(2,R): c-functions, intertwining polynomials, composition series, checkers.

Conventions.  K-types are integers n (characters of SO(2)); the M-character
sigma = +/- pairs with even/odd K-types.  The spectral coordinate identifies
the rho-shift with 1/2, so the principal series at parity sigma is reducible
exactly on real lambda in I_+ = 1/2 + Z (sigma = +) or I_- = Z (sigma = -).

At a reducibility point lambda = +/- k/2 (k a positive integer of matching
parity) the composition factors are the k-dimensional module F_k with
K-types {-(k-1), -(k-3), ..., k-1} and the discrete-series modules D_{+/-k}
with K-types {+/-(k+1), +/-(k+3), ...}; at lambda = 0 with sigma = - the
series splits as the direct sum of the two limits D_- and D_+.  These three
sets partition one parity class of Z, which pins down the F_k convention.

Membership certification: phi in Hom(E_n, E_m)-valued data satisfies the
spherical (Level-3) intertwining condition iff the ladder polynomial
q_{n,m} divides phi with even quotient; K-picture (Level-2) data must vanish
where its K-type leaves the minimal invariant submodule, and must satisfy
the c-function quotient equation with sign (-1)^{(m-n)/2}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParityMismatch, TruncationTooSmall
from .gammaprod import GammaProduct
from .poly import Poly, parity_split, poly_div_rem
from .ratfunc import RationalFunction
from .rationals import RatLike, is_half_integer, is_integer, rat, rat_str


class SigmaR(enum.Enum):
    """Character of M = {+/- Id}: trivial (+) or sign (-)."""

    PLUS = "+"
    MINUS = "-"

    @staticmethod
    def of_ktype(n: int) -> "SigmaR":
        return SigmaR.PLUS if n % 2 == 0 else SigmaR.MINUS

    @property
    def ktype_parity(self) -> int:
        return 0 if self is SigmaR.PLUS else 1


def _check_parity(n: int, m: int) -> None:
    if (n - m) % 2 != 0:
        raise ParityMismatch(f"K-types {n} and {m} have different parity")


# -- c-functions ----------------------------------------------------------------


def c_gamma_r(n: int) -> GammaProduct:
    """Symbolic Harish-Chandra c-function of the K-type n.

    (1/sqrt(pi)) * Gamma(x)Gamma(x + 1/2) / (Gamma(x + (1+n)/2) Gamma(x + (1-n)/2));
    invariant under n -> -n since the two denominator shifts swap.
    """
    half = Fraction(1, 2)
    return GammaProduct(
        [
            (1, 0, 1),
            (1, half, 1),
            (1, Fraction(1 + n, 2), -1),
            (1, Fraction(1 - n, 2), -1),
        ],
        sqrt_pi_power=-1,
    )


def c_quotient_r(n: int, m: int) -> RationalFunction:
    """Exact c-function quotient c_n / c_m in closed form.

    For |n| > |m| the quotient is the ladder
    prod (x - t) / prod (x + t) over half-integers t from (|m|+1)/2 to
    (|n|-1)/2; inverted for |n| < |m|; and 1 for |n| = |m|.
    """
    _check_parity(n, m)
    a, b = abs(n), abs(m)
    if a == b:
        return RationalFunction.one()
    lo, hi = min(a, b), max(a, b)
    ladder = [Fraction(j, 2) for j in range(lo + 1, hi, 2)]
    num = Poly.from_roots(ladder)
    den = Poly.from_roots([-t for t in ladder])
    if a > b:
        return RationalFunction(num, den)
    return RationalFunction(den, num)


# -- intertwining polynomials ------------------------------------------------------


def q_roots_r(n: int, m: int) -> list[Fraction]:
    """Roots of the intertwining polynomial q_{n,m}, in increasing order.

    Same-sign K-types (0 counts as either sign) give a one-sided ladder of
    half-integers; strictly opposite signs give the full ladder from
    -(|n|-1)/2 up to (|m|-1)/2 in integer steps.
    """
    _check_parity(n, m)
    if n == m:
        return []
    if n * m < 0:
        start = -Fraction(abs(n) - 1, 2)
        stop = Fraction(abs(m) - 1, 2)
        return [start + j for j in range(int(stop - start) + 1)]
    a, b = abs(n), abs(m)
    if a > b:
        return [-Fraction(j, 2) for j in range(a - 1, b, -2)]
    return [Fraction(j, 2) for j in range(a + 1, b, 2)]


def q_poly_r(n: int, m: int) -> Poly:
    """The monic intertwining polynomial q_{n,m} (equal to 1 when n = m)."""
    return Poly.from_roots(q_roots_r(n, m))


# -- composition series -------------------------------------------------------------


class FactorKind(enum.Enum):
    FINITE = "finite"
    DISCRETE = "discrete"
    LIMIT = "limit"


@dataclass(frozen=True)
class CompFactorR:
    """One composition factor, as a predicate on K-types.

    kind FINITE: param = k >= 1, the dimension; K-types {-(k-1), ..., k-1}.
    kind DISCRETE: param = +/-k, k >= 1; K-types {sgn(k+1), step 2, outward}.
    kind LIMIT: param = +/-1; K-types {+/-1, +/-3, ...}.
    """

    kind: FactorKind
    param: int

    @property
    def label(self) -> str:
        if self.kind is FactorKind.FINITE:
            return f"F{self.param}"
        if self.kind is FactorKind.DISCRETE:
            return f"D{self.param:+d}"
        return "D+" if self.param > 0 else "D-"

    def contains(self, n: int) -> bool:
        if self.kind is FactorKind.FINITE:
            k = self.param
            return abs(n) <= k - 1 and (n - (k - 1)) % 2 == 0
        if self.kind is FactorKind.DISCRETE:
            k = abs(self.param)
            if (n - (k + 1)) % 2 != 0:
                return False
            return n >= k + 1 if self.param > 0 else n <= -(k + 1)
        if n % 2 == 0:
            return False
        return n >= 1 if self.param > 0 else n <= -1

    def ktypes_upto(self, bound: int) -> set[int]:
        return {n for n in range(-bound, bound + 1) if self.contains(n)}


def finite_factor(k: int) -> CompFactorR:
    return CompFactorR(FactorKind.FINITE, k)


def discrete_factor(signed_k: int) -> CompFactorR:
    return CompFactorR(FactorKind.DISCRETE, signed_k)


def limit_factor(sign: int) -> CompFactorR:
    return CompFactorR(FactorKind.LIMIT, 1 if sign > 0 else -1)


@dataclass(frozen=True)
class SubmoduleR:
    """A proper closed invariant submodule, as a union of composition factors."""

    factors: tuple[CompFactorR, ...]

    @property
    def label(self) -> str:
        return "+".join(f.label for f in self.factors)

    def contains(self, n: int) -> bool:
        return any(f.contains(n) for f in self.factors)


class _Full:
    """Sentinel: no proper submodule qualifies; the whole space is meant."""

    label = "full"

    def contains(self, n: int) -> bool:
        return True

    def __repr__(self) -> str:
        return "FULL"


FULL = _Full()


@dataclass(frozen=True)
class IrreducibleR:
    """Verdict value for parameters where the principal series is irreducible."""

    sigma: SigmaR
    lam: Fraction


@dataclass(frozen=True)
class CompositionSeriesR:
    """Layered composition series (socle first) plus all proper submodules."""

    sigma: SigmaR
    lam: Fraction
    layers: tuple[tuple[CompFactorR, ...], ...]
    proper_submodules: tuple[SubmoduleR, ...]

    @property
    def factors(self) -> tuple[CompFactorR, ...]:
        return tuple(f for layer in self.layers for f in layer)


def is_reducible_r(sigma: SigmaR, lam: Fraction) -> bool:
    return is_half_integer(lam) if sigma is SigmaR.PLUS else is_integer(lam)


def composition_series_r(sigma: SigmaR, lam: RatLike) -> CompositionSeriesR | IrreducibleR:
    """Classify the principal series at (sigma, lambda).

    Reducible points carry either two layers (F_k against D_{-k} (+) D_k,
    with the socle decided by the sign of lambda) or, at lambda = 0 with
    sigma = -, the single semisimple layer D_- (+) D_+.
    """
    lam = rat(lam)
    if not is_reducible_r(sigma, lam):
        return IrreducibleR(sigma, lam)
    if lam == 0:
        dm, dp = limit_factor(-1), limit_factor(+1)
        return CompositionSeriesR(
            sigma,
            lam,
            layers=((dm, dp),),
            proper_submodules=(SubmoduleR((dp,)), SubmoduleR((dm,))),
        )
    k = int(2 * abs(lam))
    fk = finite_factor(k)
    dneg, dpos = discrete_factor(-k), discrete_factor(k)
    if lam > 0:
        return CompositionSeriesR(
            sigma,
            lam,
            layers=((dneg, dpos), (fk,)),
            proper_submodules=(
                SubmoduleR((dneg,)),
                SubmoduleR((dpos,)),
                SubmoduleR((dneg, dpos)),
            ),
        )
    return CompositionSeriesR(
        sigma,
        lam,
        layers=((fk,), (dneg, dpos)),
        proper_submodules=(
            SubmoduleR((fk,)),
            SubmoduleR((fk, dneg)),
            SubmoduleR((fk, dpos)),
        ),
    )


def smallest_submodule_r(m: int, lam: RatLike) -> SubmoduleR | _Full:
    """Smallest invariant submodule whose K-types include m, or FULL.

    The parity of m selects sigma.  At irreducible points, and at reducible
    points where the K-type m only lives in the top quotient, the answer is
    the whole space.
    """
    lam = rat(lam)
    series = composition_series_r(SigmaR.of_ktype(m), lam)
    if isinstance(series, IrreducibleR):
        return FULL
    containing = [w for w in series.proper_submodules if w.contains(m)]
    if not containing:
        return FULL
    return min(containing, key=lambda w: len(w.factors))


def reducibility_points_r(sigma: SigmaR, bound: Fraction) -> list[Fraction]:
    """All reducibility points lambda with |lambda| <= bound, ascending."""
    points = []
    step = Fraction(1)
    start = Fraction(1, 2) if sigma is SigmaR.PLUS else Fraction(0)
    t = start
    while t <= bound:
        points.append(t)
        if t != 0:
            points.append(-t)
        t += step
    return sorted(points)


# -- Level-3 membership -----------------------------------------------------------


@dataclass(frozen=True)
class RootWitness:
    """phi fails to vanish at a root of the intertwining polynomial."""

    root: Fraction
    value: Fraction


@dataclass(frozen=True)
class OddQuotientWitness:
    """The quotient phi / q has a nonzero odd-degree coefficient."""

    degree: int
    coeff: Fraction


@dataclass(frozen=True)
class Level3AcceptR:
    h: Poly
    accepted: bool = True


@dataclass(frozen=True)
class Level3RejectR:
    witness: RootWitness | OddQuotientWitness
    accepted: bool = False


def level3_check_r(phi: Poly, n: int, m: int) -> Level3AcceptR | Level3RejectR:
    """Certify phi = h * q_{n,m} with h even, or return a structured witness.

    q_{n,m} has simple roots (consecutive distinct half-integers), so a single
    exact division decides divisibility; a nonzero remainder is localized at
    a root where phi does not vanish.
    """
    q = q_poly_r(n, m)
    roots = q_roots_r(n, m)
    assert len(set(roots)) == len(roots), "ladder roots must be simple"
    quotient, remainder = poly_div_rem(phi, q)
    if not remainder.is_zero:
        for r in roots:
            value = phi(r)
            if value != 0:
                return Level3RejectR(RootWitness(root=r, value=value))
        raise AssertionError("nonzero remainder with phi vanishing at all simple roots")
    _, odd = parity_split(quotient)
    if not odd.is_zero:
        degree = next(i for i, c in enumerate(odd.coeffs) if c != 0)
        return Level3RejectR(OddQuotientWitness(degree=degree, coeff=odd[degree]))
    return Level3AcceptR(h=quotient)


# -- Level-2 membership ------------------------------------------------------------


@dataclass(frozen=True)
class VanishingCheck:
    """Condition at one reducibility point: psi_n(lambda) must vanish."""

    lam: Fraction
    ktype: int
    submodule: str
    value: Fraction
    ok: bool


@dataclass(frozen=True)
class FunctionalCheck:
    """Cleared c-quotient functional equation for one K-type component."""

    ktype: int
    sign: int
    ok: bool


@dataclass(frozen=True)
class Level2ReportR:
    m: int
    truncation: int
    vanishing: tuple[VanishingCheck, ...]
    functional: tuple[FunctionalCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.vanishing) and all(c.ok for c in self.functional)


def _ks_sign(n: int, m: int) -> int:
    return -1 if ((m - n) // 2) % 2 else 1


def level2_check_r(psi: dict[int, Poly], m: int, truncation: int) -> Level2ReportR:
    """Check K-picture data psi (one polynomial per K-type) against both
    intertwining conditions for the bundle K-type m.

    Vanishing condition: at every reducibility point lambda with
    |lambda| <= (N+1)/2 and every component K-type n outside the smallest
    invariant submodule containing m, psi_n(lambda) = 0.

    Functional equation: for every component,
    psi_n(-x) * den = sign * num * psi_n(x) exactly, where num/den is the
    c-quotient c_n/c_m and sign = (-1)^((m-n)/2).
    """
    for n in psi:
        _check_parity(n, m)
        if abs(n) > truncation:
            raise TruncationTooSmall(f"K-type {n} exceeds truncation {truncation}")
    sigma = SigmaR.of_ktype(m)
    bound = Fraction(truncation + 1, 2)

    vanishing = []
    for lam in reducibility_points_r(sigma, bound):
        submodule = smallest_submodule_r(m, lam)
        if isinstance(submodule, _Full):
            continue
        for n in sorted(psi):
            if submodule.contains(n):
                continue
            value = psi[n](lam)
            vanishing.append(
                VanishingCheck(lam=lam, ktype=n, submodule=submodule.label,
                               value=value, ok=(value == 0))
            )

    functional = []
    for n in sorted(psi):
        quotient = c_quotient_r(n, m)
        sign = _ks_sign(n, m)
        lhs = psi[n].reflect() * quotient.den
        rhs = quotient.num * psi[n] * sign
        functional.append(FunctionalCheck(ktype=n, sign=sign, ok=(lhs == rhs)))

    return Level2ReportR(m=m, truncation=truncation,
                         vanishing=tuple(vanishing), functional=tuple(functional))


# -- box pictures ---------------------------------------------------------------------


@dataclass(frozen=True)
class BoxR:
    label: str
    highlighted: bool


@dataclass(frozen=True)
class BoxPictureR:
    """Layered factor layout with the minimal submodule containing m marked."""

    m: int
    lam: Fraction
    layers: tuple[tuple[BoxR, ...], ...]  # socle first
    full: bool

    @property
    def highlighted_labels(self) -> tuple[str, ...]:
        return tuple(b.label for layer in self.layers for b in layer if b.highlighted)


def box_picture_r(m: int, lam: RatLike) -> BoxPictureR:
    """Box picture at (parity of m, lambda) with the m-submodule highlighted."""
    lam = rat(lam)
    sigma = SigmaR.of_ktype(m)
    series = composition_series_r(sigma, lam)
    if isinstance(series, IrreducibleR):
        label = f"H({sigma.value},{rat_str(lam)})"
        return BoxPictureR(m=m, lam=lam, layers=((BoxR(label, True),),), full=True)
    submodule = smallest_submodule_r(m, lam)
    full = isinstance(submodule, _Full)
    marked = set(series.factors) if full else set(submodule.factors)
    layers = tuple(
        tuple(BoxR(f.label, f in marked) for f in layer) for layer in series.layers
    )
    return BoxPictureR(m=m, lam=lam, layers=layers, full=full)
