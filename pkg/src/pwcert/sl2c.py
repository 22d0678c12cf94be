"""SL(2,C): weights, c-functions, classification, ladder operators, checkers.

K-types are nonnegative integers n (dimension n + 1) with M-weights
-n, -n+2, ..., n, each of multiplicity one; M-characters are integers.
The rho-shift is identified with 2, and the principal series at (sigma,
lambda) is reducible exactly for real integral lambda with |lambda| > |sigma|
and |lambda| - |sigma| even.

Morphism-valued holomorphic data between two K-types of equal parity is
diagonal in the common weight basis, which this module models as a finite
weight -> polynomial map (WeightedDiagMap).  Endomorphism-valued data that
satisfies the intertwining conditions forms the diagonal algebra with the
constraints phi_k(x) = phi_{-k}(-x) and phi_k(l) = phi_l(k); it is a free
module over polynomials in the Casimir parameter mu = x^2 + k^2 with the
m + 1 generators (k*x)^l, and the decomposition here follows the two-step
weight-restriction induction that proves freeness, so coordinates are exact
and unique.

Membership at distinct K-types is certified by componentwise exact division
by the ladder chain q_{n,m} (products of the first-order operators
q^+ : component x + (m+2), and q^- : component ((m+2)^2 - k^2)(x - (m+2)))
followed by the diagonal-algebra test on the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InternalNonDivisibility,
    NotInAlgebra,
    NotReduciblePoint,
    ParityMismatch,
    SrcDstMismatch,
    WeightNotInKType,
)
from .gammaprod import GammaProduct
from .poly import (
    Poly,
    compose,
    even_part_in,
    lagrange_interpolate,
    parity_split,
    poly_div_rem,
)
from .ratfunc import RationalFunction
from .rationals import RatLike, is_integer, rat


# -- weights and tensor products ------------------------------------------------


def weights(n: int) -> list[int]:
    """M-weights of the K-type n: -n, -n+2, ..., n (each multiplicity one)."""
    if n < 0:
        raise ValueError("K-types are nonnegative integers")
    return list(range(-n, n + 1, 2))


def clebsch_gordan(n: int, m: int) -> list[int]:
    """Irreducible constituents of the tensor product, highest first."""
    if n < 0 or m < 0:
        raise ValueError("K-types are nonnegative integers")
    return list(range(n + m, abs(n - m) - 1, -2))


def _check_parity(n: int, m: int) -> None:
    if (n - m) % 2 != 0:
        raise ParityMismatch(f"K-types {n} and {m} have different parity")


# -- c-functions -------------------------------------------------------------------


def c_gamma_c(n: int, sigma: int) -> GammaProduct:
    """Symbolic c-function of K-type n at the M-weight sigma.

    Gamma((x + sigma)/2) Gamma((x - sigma)/2)
    / (Gamma((x + n + 2)/2) Gamma((x - n)/2)), defined for |sigma| <= n of
    equal parity (the weight must occur in the K-type).
    """
    if abs(sigma) > n or (n - sigma) % 2 != 0:
        raise WeightNotInKType(f"weight {sigma} does not occur in K-type {n}")
    half = Fraction(1, 2)
    return GammaProduct(
        [
            (half, Fraction(sigma, 2), 1),
            (half, Fraction(-sigma, 2), 1),
            (half, Fraction(n + 2, 2), -1),
            (half, Fraction(-n, 2), -1),
        ]
    )


def c_quotient_c(n: int, m: int) -> RationalFunction:
    """Exact c-function quotient c_n / c_m (independent of the M-weight).

    For n > m: prod (x - j) / prod (x + j) over j = m+2, m+4, ..., n;
    inverted for n < m; 1 for n = m.
    """
    if n < 0 or m < 0:
        raise ValueError("K-types are nonnegative integers")
    _check_parity(n, m)
    if n == m:
        return RationalFunction.one()
    lo, hi = min(n, m), max(n, m)
    ladder = list(range(lo + 2, hi + 1, 2))
    num = Poly.from_roots(ladder)
    den = Poly.from_roots([-j for j in ladder])
    if n > m:
        return RationalFunction(num, den)
    return RationalFunction(den, num)


# -- reducibility and the intertwiner diamond ----------------------------------------


@dataclass(frozen=True)
class ReducibilityC:
    """Classification of the principal series at (sigma, lambda).

    When reducible (lambda integral, |lambda| > |sigma|, gap even), the
    finite-dimensional factor restricted to K is the tensor product of the
    K-types fm and fn computed at the positive-lambda representative; its
    K-types are |sigma|, |sigma|+2, ..., |lambda|-2, and the unique
    irreducible constituent R takes the complementary K-types >= |lambda|.
    For lambda > 0 the socle is R, for lambda < 0 the finite factor.
    """

    sigma: int
    lam: Fraction
    reducible: bool
    fm: int | None = None
    fn: int | None = None
    socle_is_R: bool | None = None
    finite_dim_ktypes: tuple[int, ...] = field(default_factory=tuple)

    @property
    def h_ktype_min(self) -> int:
        return abs(self.sigma)

    def h_contains(self, t: int) -> bool:
        return t >= abs(self.sigma) and (t - self.sigma) % 2 == 0

    def f_contains(self, t: int) -> bool:
        return t in self.finite_dim_ktypes

    def r_contains(self, t: int) -> bool:
        if not self.reducible:
            return False
        return t >= abs(int(self.lam)) and (t - self.sigma) % 2 == 0


def reducibility_c(sigma: int, lam: RatLike) -> ReducibilityC:
    """Classify (sigma, lambda); total on rational lambda."""
    lam = rat(lam)
    reducible = (
        is_integer(lam)
        and abs(lam) > abs(sigma)
        and (abs(int(lam)) - abs(sigma)) % 2 == 0
    )
    if not reducible:
        return ReducibilityC(sigma=sigma, lam=lam, reducible=False)
    lpos = abs(int(lam))
    fm = (sigma + lpos) // 2 - 1
    fn = (lpos - sigma) // 2 - 1
    return ReducibilityC(
        sigma=sigma,
        lam=lam,
        reducible=True,
        fm=fm,
        fn=fn,
        socle_is_R=lam > 0,
        finite_dim_ktypes=tuple(clebsch_gordan(fm, fn)),
    )


def reducibility_c_complex(sigma: int, lam: complex) -> ReducibilityC:
    """Entry point for non-real parameters: anything off the real axis is irreducible."""
    if lam.imag != 0:
        return ReducibilityC(sigma=sigma, lam=Fraction(0), reducible=False)
    return reducibility_c(sigma, Fraction(lam.real))


Vertex = tuple[int, int]  # (sigma, lambda) with integral lambda


@dataclass(frozen=True)
class DiamondArrow:
    name: str
    src: Vertex
    dst: Vertex


@dataclass(frozen=True)
class IntertwinerDiamond:
    """The four-series parameter orbit and its six intertwiners.

    Vertices are the Weyl/ladder orbit of (sigma, lambda): right (sigma,
    lambda), left (-sigma, -lambda), top (lambda, sigma), bottom
    (-lambda, -sigma).  Arrows carry the standard names: L (bottom ->
    right), L' (top -> right), Lt (left -> top), Lt' (left -> bottom) and
    the two Knapp-Stein arrows J (right -> left, top -> bottom).
    """

    right: Vertex
    left: Vertex
    top: Vertex
    bottom: Vertex
    arrows: tuple[DiamondArrow, ...]

    @property
    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        return (self.right, self.left, self.top, self.bottom)

    def orbit(self) -> frozenset[Vertex]:
        return frozenset(self.vertices)


def diamond(sigma: int, lam: RatLike) -> IntertwinerDiamond:
    """Structural data of the intertwiner diamond at a reducible point."""
    verdict = reducibility_c(sigma, lam)
    if not verdict.reducible:
        raise NotReduciblePoint(f"(sigma, lambda) = ({sigma}, {lam}) is not reducible")
    lam_int = int(verdict.lam)
    right: Vertex = (sigma, lam_int)
    left: Vertex = (-sigma, -lam_int)
    top: Vertex = (lam_int, sigma)
    bottom: Vertex = (-lam_int, -sigma)
    arrows = (
        DiamondArrow("L", bottom, right),
        DiamondArrow("L'", top, right),
        DiamondArrow("Lt", left, top),
        DiamondArrow("Lt'", left, bottom),
        DiamondArrow("J", right, left),
        DiamondArrow("J", top, bottom),
    )
    return IntertwinerDiamond(right=right, left=left, top=top, bottom=bottom, arrows=arrows)


def diamond_orbit(sigma: int, lam: int) -> frozenset[Vertex]:
    """Parameter orbit {(s,l), (-s,-l), (l,s), (-l,-s)} without reducibility demands."""
    return frozenset({(sigma, lam), (-sigma, -lam), (lam, sigma), (-lam, -sigma)})


# -- weight-diagonal morphism data ------------------------------------------------------


class WeightedDiagMap:
    """Holomorphic Hom-valued data, diagonal in the common M-weight basis.

    Component keys are exactly the weights of the smaller K-type when the
    parities of src and dst agree; for opposite parities the Hom space is
    zero and the map is the canonical Zero value with no components.
    Instances are immutable.
    """

    __slots__ = ("src", "dst", "_components")

    def __init__(self, src: int, dst: int, components: dict[int, Poly]) -> None:
        if src < 0 or dst < 0:
            raise ValueError("K-types are nonnegative integers")
        expected = set(common_weights(src, dst))
        if set(components) != expected:
            raise WeightNotInKType(
                f"components must be keyed by exactly the common weights {sorted(expected)}"
            )
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "dst", dst)
        object.__setattr__(self, "_components", dict(components))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("WeightedDiagMap is immutable")

    @property
    def components(self) -> dict[int, Poly]:
        return dict(self._components)

    @property
    def is_zero_hom(self) -> bool:
        return (self.src - self.dst) % 2 != 0

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self._components.values())

    def __getitem__(self, k: int) -> Poly:
        return self._components[k]

    def level(self) -> int:
        return min(self.src, self.dst)

    def restrict(self, m: int) -> dict[int, Poly]:
        """Component dict restricted to the weights of the K-type m."""
        return {k: self._components[k] for k in weights(m)}

    def then(self, outer: "WeightedDiagMap") -> "WeightedDiagMap":
        """Composition outer o self (self first); zero where weights drop out."""
        if outer.src != self.dst:
            raise SrcDstMismatch(f"cannot compose: {self.dst} -> expected {outer.src}")
        comps = {}
        for k in common_weights(self.src, outer.dst):
            if k in self._components and k in outer._components:
                comps[k] = self._components[k] * outer._components[k]
            else:
                comps[k] = Poly.zero()
        return WeightedDiagMap(self.src, outer.dst, comps)

    def __add__(self, other: "WeightedDiagMap") -> "WeightedDiagMap":
        if (self.src, self.dst) != (other.src, other.dst):
            raise SrcDstMismatch("can only add maps with equal source and target")
        return WeightedDiagMap(
            self.src, self.dst,
            {k: self._components[k] + other._components[k] for k in self._components},
        )

    def scale(self, c: RatLike) -> "WeightedDiagMap":
        c = rat(c)
        return WeightedDiagMap(
            self.src, self.dst, {k: p * c for k, p in self._components.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedDiagMap):
            return NotImplemented
        return (self.src, self.dst) == (other.src, other.dst) and self._components == other._components

    def __hash__(self) -> int:
        return hash((self.src, self.dst, tuple(sorted(self._components.items()))))

    def __repr__(self) -> str:
        comps = ", ".join(f"{k}: {p.format()}" for k, p in sorted(self._components.items()))
        return f"WeightedDiagMap({self.src} -> {self.dst}, {{{comps}}})"


def common_weights(n: int, m: int) -> list[int]:
    """Weights shared by two K-types: all weights of the smaller one (if parities agree)."""
    if (n - m) % 2 != 0:
        return []
    return weights(min(n, m))


def diag_map(src: int, dst: int, component: Poly | dict[int, Poly]) -> WeightedDiagMap:
    """Build a map from one polynomial (broadcast) or a full component dict."""
    if isinstance(component, Poly):
        return WeightedDiagMap(src, dst, {k: component for k in common_weights(src, dst)})
    return WeightedDiagMap(src, dst, dict(component))


def zero_map(src: int, dst: int) -> WeightedDiagMap:
    return WeightedDiagMap(src, dst, {k: Poly.zero() for k in common_weights(src, dst)})


def identity_map(m: int) -> WeightedDiagMap:
    return diag_map(m, m, Poly.one())


# -- ladder operators -------------------------------------------------------------------


def q_plus(m: int) -> WeightedDiagMap:
    """First-order raising operator m -> m+2: every component x + (m + 2)."""
    return diag_map(m, m + 2, Poly((m + 2, 1)))


def q_minus(m: int) -> WeightedDiagMap:
    """First-order lowering operator m+2 -> m: ((m+2)^2 - k^2) (x - (m+2)) at weight k."""
    comps = {
        k: Poly((-(m + 2), 1)) * ((m + 2) ** 2 - k * k) for k in weights(m)
    }
    return WeightedDiagMap(m + 2, m, comps)


def q_roots_c(n: int, m: int) -> list[Fraction]:
    """Roots (shared by every component) of the chain polynomial q_{n,m}."""
    _check_parity(n, m)
    if n < m:
        return [Fraction(-(j + 2)) for j in range(n, m, 2)]
    return [Fraction(j + 2) for j in range(m, n, 2)]


def q_nm_c(n: int, m: int) -> WeightedDiagMap:
    """The ladder chain q_{n,m}: identity for n = m, raising chain composed
    q^+_{m-2} ... q^+_n for n < m, lowering chain q^-_m ... q^-_{n-2} for n > m.

    Components come out in closed form: for n < m the weight-independent
    product of (x + j + 2) over the chain; for n > m the product of
    ((j+2)^2 - k^2)(x - (j + 2)).
    """
    _check_parity(n, m)
    if n == m:
        return identity_map(n)
    if n < m:
        chain = Poly.one()
        for j in range(n, m, 2):
            chain = chain * Poly((j + 2, 1))
        return diag_map(n, m, chain)
    comps = {}
    for k in weights(m):
        p = Poly.one()
        for j in range(m, n, 2):
            p = p * Poly((-(j + 2), 1)) * ((j + 2) ** 2 - k * k)
        comps[k] = p
    return WeightedDiagMap(n, m, comps)


# -- the diagonal algebra --------------------------------------------------------------


@dataclass(frozen=True)
class SymmetryWitness:
    """phi_k(x) != phi_{-k}(-x) for this weight."""

    weight: int


@dataclass(frozen=True)
class SwapWitness:
    """phi_k(l) != phi_l(k) for this pair of weights."""

    weight_k: int
    weight_l: int
    value_kl: Fraction
    value_lk: Fraction


@dataclass(frozen=True)
class AlgebraAccept:
    accepted: bool = True


@dataclass(frozen=True)
class AlgebraReject:
    witness: SymmetryWitness | SwapWitness
    accepted: bool = False


def algebra_check(phi: WeightedDiagMap) -> AlgebraAccept | AlgebraReject:
    """Test both diagonal-algebra conditions on an endomorphism-valued map.

    (i) phi_k(x) = phi_{-k}(-x) as exact polynomial identities;
    (ii) phi_k(l) = phi_l(k) for all weight pairs.
    """
    if phi.src != phi.dst:
        raise SrcDstMismatch("algebra membership is defined for src = dst")
    wts = weights(phi.src)
    for k in wts:
        if k < 0:
            continue
        if phi[k] != phi[-k].reflect():
            return AlgebraReject(SymmetryWitness(weight=k))
    for i, k in enumerate(wts):
        for l in wts[i + 1 :]:
            vkl, vlk = phi[k](Fraction(l)), phi[l](Fraction(k))
            if vkl != vlk:
                return AlgebraReject(SwapWitness(weight_k=k, weight_l=l,
                                                 value_kl=vkl, value_lk=vlk))
    return AlgebraAccept()


@dataclass(frozen=True)
class GeneratorCoords:
    """Coordinates h_0..h_m (polynomials in mu = x^2 + k^2) over the generators (k x)^l."""

    m: int
    h: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.h) != self.m + 1:
            raise ValueError(f"expected {self.m + 1} coordinates, got {len(self.h)}")


def synthesize(coords: GeneratorCoords) -> WeightedDiagMap:
    """Assemble phi_k(x) = sum_l h_l(x^2 + k^2) (k x)^l over all weights of m."""
    m = coords.m
    comps = {}
    for k in weights(m):
        mu = Poly((k * k, 0, 1))  # x^2 + k^2
        total = Poly.zero()
        for l, h in enumerate(coords.h):
            if h.is_zero:
                continue
            total = total + compose(h, mu) * Poly.monomial(l, Fraction(k) ** l)
        comps[k] = total
    return WeightedDiagMap(m, m, comps)


def _casimir_expansion(m: int) -> dict[int, Poly]:
    """Expansion of the pinning polynomial p_m(x, k) in the basis (k x)^l.

    p_m(x,k) = prod over weights |l| <= m-2 of parity m of (k - l)(x - l);
    pairing +/-l gives (kx)^2 - l^2 (x^2 + k^2) + l^4, so p_m is a polynomial
    in t = kx with coefficients in mu = x^2 + k^2, monic of degree m - 1 in t.
    Returned as {power of t: coefficient polynomial in mu}.
    """
    if m < 2:
        return {0: Poly.one()}
    expansion: dict[int, Poly] = {1: Poly.one()} if m % 2 == 0 else {0: Poly.one()}
    top = m - 2
    first_positive = 2 if m % 2 == 0 else 1
    for l in range(first_positive, top + 1, 2):
        factor_const = Poly((Fraction(l**4), -Fraction(l**2)))  # l^4 - l^2 mu
        new: dict[int, Poly] = {}
        for e, coeff in expansion.items():
            new[e + 2] = new.get(e + 2, Poly.zero()) + coeff
            new[e] = new.get(e, Poly.zero()) + coeff * factor_const
        expansion = new
    return expansion


def _pinning_constant(m: int) -> Fraction:
    """p_m(x, m) = c_m * prod (x - l); this is c_m = prod (m - l) over the index set."""
    c = Fraction(1)
    for l in range(-(m - 2), m - 1, 2):
        c *= m - l
    return c


def _pinning_roots(m: int) -> list[int]:
    return list(range(-(m - 2), m - 1, 2))


def free_module_decompose(phi: WeightedDiagMap) -> GeneratorCoords:
    """Unique generator coordinates of an algebra element.

    Two-step induction on m: the base cases invert an even substitution
    (m = 0) or an even/odd split (m = 1); the inductive step decomposes the
    restriction to weights |k| <= m-2, synthesizes it back at the extreme
    weights, divides the defect exactly by p_m(x, m) (divisibility is
    guaranteed for algebra elements; failure means a library bug), splits the
    cofactor, and redistributes through the (k x)-expansion of p_m.
    """
    result = algebra_check(phi)
    if not result.accepted:
        raise NotInAlgebra(f"input fails the diagonal-algebra conditions: {result.witness}")
    h = _decompose_components(phi.components, phi.src)
    return GeneratorCoords(m=phi.src, h=tuple(h))


def _decompose_components(comps: dict[int, Poly], m: int) -> list[Poly]:
    if m == 0:
        return [even_part_in(comps[0], 0)]
    if m == 1:
        even, odd = parity_split(comps[1])
        h0 = even_part_in(even, 1)
        h1 = even_part_in(Poly(odd.coeffs[1:]) if odd else Poly.zero(), 1)
        return [h0, h1]
    lower = _decompose_components({k: comps[k] for k in weights(m - 2)}, m - 2)
    mu_m = Poly((m * m, 0, 1))
    synth_top = Poly.zero()
    for l, hl in enumerate(lower):
        if not hl.is_zero:
            synth_top = synth_top + compose(hl, mu_m) * Poly.monomial(l, Fraction(m) ** l)
    defect = comps[m] - synth_top
    h_full = list(lower) + [Poly.zero(), Poly.zero()]
    if defect.is_zero:
        return h_full
    divisor = Poly.from_roots(_pinning_roots(m))
    cofactor, remainder = poly_div_rem(defect, divisor)
    if not remainder.is_zero:
        raise InternalNonDivisibility(
            f"defect at weight {m} not divisible by the pinning polynomial (m = {m})"
        )
    cofactor = cofactor / _pinning_constant(m)
    even, odd = parity_split(cofactor)
    h0p = even_part_in(even, m * m)
    odd_reduced = Poly(odd.coeffs[1:]) if odd else Poly.zero()
    h1p = even_part_in(odd_reduced, m * m) / m
    for power, coeff_mu in _casimir_expansion(m).items():
        if not h0p.is_zero:
            h_full[power] = h_full[power] + h0p * coeff_mu
        if not h1p.is_zero:
            h_full[power + 1] = h_full[power + 1] + h1p * coeff_mu
    return h_full


# -- Level-3 membership ---------------------------------------------------------------


@dataclass(frozen=True)
class WeightRootWitness:
    """At this weight, the component fails to vanish at a chain root."""

    weight: int
    root: Fraction
    value: Fraction


@dataclass(frozen=True)
class Level3AcceptC:
    h: WeightedDiagMap
    coords: GeneratorCoords
    accepted: bool = True


@dataclass(frozen=True)
class Level3RejectC:
    witness: WeightRootWitness | SymmetryWitness | SwapWitness
    accepted: bool = False


def level3_check_c(phi: WeightedDiagMap) -> Level3AcceptC | Level3RejectC:
    """Certify phi = (quotient in the diagonal algebra) * q_{src,dst}.

    Componentwise exact division by the chain, then the algebra test on the
    quotient; acceptance also returns the quotient's generator coordinates.
    """
    if phi.is_zero_hom:
        raise ParityMismatch(
            f"K-types {phi.src} and {phi.dst} have different parity (zero Hom space)"
        )
    n, m = phi.src, phi.dst
    chain = q_nm_c(n, m)
    level = min(n, m)
    comps = {}
    for k in weights(level):
        quotient, remainder = poly_div_rem(phi[k], chain[k])
        if not remainder.is_zero:
            for root in q_roots_c(n, m):
                value = phi[k](root)
                if value != 0:
                    return Level3RejectC(WeightRootWitness(weight=k, root=root, value=value))
            raise AssertionError("nonzero remainder despite vanishing at all chain roots")
        comps[k] = quotient
    h = WeightedDiagMap(level, level, comps)
    verdict = algebra_check(h)
    if not verdict.accepted:
        return Level3RejectC(verdict.witness)
    return Level3AcceptC(h=h, coords=free_module_decompose(h))


# -- interpolation extension -------------------------------------------------------------


def extend_interpolate(h: WeightedDiagMap, target: int) -> WeightedDiagMap:
    """Extend an algebra element from level m to level target > m.

    Each new top component is the Lagrange interpolant, in the spectral
    variable, through the values of the previous stage's components at the
    new weight; the opposite weight is filled by reflection.  The output
    restricts back to the input and satisfies the algebra conditions at the
    target level.
    """
    if h.src != h.dst:
        raise SrcDstMismatch("extension is defined for src = dst")
    _check_parity(h.src, target)
    if target < h.src:
        raise ValueError("target K-type must be >= the source level")
    verdict = algebra_check(h)
    if not verdict.accepted:
        raise NotInAlgebra(f"input fails the diagonal-algebra conditions: {verdict.witness}")
    if target == h.src:
        return h
    comps = dict(h.components)
    for new in range(h.src + 2, target + 1, 2):
        nodes = weights(new - 2)
        points = [(Fraction(i), comps[i](Fraction(new))) for i in nodes]
        top = lagrange_interpolate(points)
        comps[new] = top
        comps[-new] = top.reflect()
    return WeightedDiagMap(target, target, comps)


# -- Level-2 scalar shadow ------------------------------------------------------------------


@dataclass(frozen=True)
class WeightPairCheck:
    weight: int
    ok: bool
    reason: str = ""


@dataclass(frozen=True)
class Level2ReportC:
    n: int
    partner: int | None
    checks: tuple[WeightPairCheck, ...]
    passed: bool


def _candidate_ratios(n: int, j: int) -> list[tuple[int, RationalFunction]]:
    """Admissible component ratios of ladder images with j chain steps.

    An accepted morphism-valued map with source n and target m satisfies,
    on every weight, phi_{-k}(-x) = sign * (c_m / c_n)(x) * phi_k(x) with
    sign = (-1)^((m-n)/2); for fixed step count j the two candidates are the
    raising partner m = n + 2j and (when defined) the lowering partner
    m = n - 2j.
    """
    sign = -1 if j % 2 else 1
    candidates = [(n + 2 * j, sign * c_quotient_c(n + 2 * j, n))]
    if n - 2 * j >= 0:
        candidates.append((n - 2 * j, sign * c_quotient_c(n - 2 * j, n)))
    return candidates


def level2_functional_check_c(psi: dict[int, Poly], n: int) -> Level2ReportC:
    """Scalar shadow of the K-picture functional equation for the K-type n.

    Checks that all weight components share one ratio
    psi_{-k}(-x) / psi_k(x) and that this ratio is a signed c-function
    quotient ladder based at n (the identity every ladder image satisfies).
    Missing weights count as zero components.
    """
    wts = weights(n)
    for k in psi:
        if k not in wts:
            raise WeightNotInKType(f"weight {k} does not occur in K-type {n}")
    comp = {k: psi.get(k, Poly.zero()) for k in wts}

    checks: list[WeightPairCheck] = []
    ratio: RationalFunction | None = None
    for k in wts:
        a, b = comp[k], comp[-k]
        if a.is_zero and b.is_zero:
            continue
        if a.is_zero or b.is_zero:
            checks.append(WeightPairCheck(weight=k, ok=False,
                                          reason="component vanishes on one side only"))
            continue
        if ratio is None:
            ratio = RationalFunction(b.reflect(), a)
        if b.reflect() * ratio.den != ratio.num * a:
            checks.append(WeightPairCheck(weight=k, ok=False,
                                          reason="component ratio differs across weights"))
        else:
            checks.append(WeightPairCheck(weight=k, ok=True))

    partner: int | None = None
    if ratio is not None and all(c.ok for c in checks):
        if ratio.is_one:
            partner = n
        else:
            j = max(ratio.num.degree, ratio.den.degree)
            for m, candidate in _candidate_ratios(n, j):
                if ratio == candidate:
                    partner = m
                    break
            if partner is None:
                checks.append(WeightPairCheck(weight=0, ok=False,
                                              reason="shared ratio is not a c-quotient ladder"))
    passed = all(c.ok for c in checks)
    return Level2ReportC(n=n, partner=partner, checks=tuple(checks), passed=passed)
