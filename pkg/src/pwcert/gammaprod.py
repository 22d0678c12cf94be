"""Formal products of Gamma factors and their exact rational quotients.

A GammaProduct is prefactor * (1/sqrt(pi))^s * prod Gamma(scale*x + shift)^exp.
Harish-Chandra c-functions live here before reduction: SL(2,R) uses scale 1,
SL(2,C) uses scale 1/2, and quotients of two such products collapse to exact
rational functions through the recurrence Gamma(z + 1) = z * Gamma(z), applied
once per unit gap between paired shifts.

Pairing requires, per group of factors with equal scale and congruent shift
(equal fractional part), that the exponents cancel overall; otherwise the
quotient is simply not a rational function and ``IrreducibleGammaQuotient``
is raised.  The sqrt(pi) prefactor must likewise cancel.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .errors import IrreducibleGammaQuotient
from .poly import Poly
from .ratfunc import RationalFunction
from .rationals import RatLike, rat, rat_str

Factor = tuple[Fraction, Fraction, int]  # (scale, shift, exponent)


class GammaProduct:
    """Immutable formal product of Gamma factors with a rational prefactor."""

    __slots__ = ("_prefactor", "_factors", "_sqrt_pi_power")

    def __init__(
        self,
        factors: list[tuple[RatLike, RatLike, int]] | tuple[tuple[RatLike, RatLike, int], ...] = (),
        prefactor: RationalFunction | RatLike = 1,
        sqrt_pi_power: int = 0,
    ) -> None:
        merged: dict[tuple[Fraction, Fraction], int] = {}
        for scale, shift, exp in factors:
            key = (rat(scale), rat(shift))
            merged[key] = merged.get(key, 0) + int(exp)
        clean = tuple(
            (scale, shift, exp)
            for (scale, shift), exp in sorted(merged.items())
            if exp != 0
        )
        if not isinstance(prefactor, RationalFunction):
            prefactor = RationalFunction(Poly.const(rat(prefactor)))
        self._prefactor = prefactor
        self._factors = clean
        self._sqrt_pi_power = int(sqrt_pi_power)

    @property
    def prefactor(self) -> RationalFunction:
        return self._prefactor

    @property
    def factors(self) -> tuple[Factor, ...]:
        return self._factors

    @property
    def sqrt_pi_power(self) -> int:
        return self._sqrt_pi_power

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaProduct):
            return NotImplemented
        return (
            self._factors == other._factors
            and self._prefactor == other._prefactor
            and self._sqrt_pi_power == other._sqrt_pi_power
        )

    def __hash__(self) -> int:
        return hash((self._factors, self._prefactor, self._sqrt_pi_power))

    def format(self, var: str = "x") -> str:
        parts = []
        if self._sqrt_pi_power:
            parts.append(f"pi^({rat_str(Fraction(self._sqrt_pi_power, 2))})")
        if not self._prefactor.is_one:
            parts.append(f"({self._prefactor.format(var)})")
        for scale, shift, exp in self._factors:
            arg = Poly((shift, scale)).format(var)
            parts.append(f"Gamma({arg})" + (f"^{exp}" if exp != 1 else ""))
        return " * ".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"GammaProduct({self.format()})"


def _pair_contribution(scale: Fraction, a: Fraction, b: Fraction) -> RationalFunction:
    """Gamma(scale*x + a) / Gamma(scale*x + b) for integer a - b, as a rational function."""
    gap = a - b
    steps = int(gap)
    if steps >= 0:
        num = Poly.one()
        for j in range(steps):
            num = num * Poly((b + j, scale))
        return RationalFunction(num)
    den = Poly.one()
    for j in range(-steps):
        den = den * Poly((a + j, scale))
    return RationalFunction(Poly.one(), den)


def gamma_reduce(numerator: GammaProduct, denominator: GammaProduct) -> RationalFunction:
    """Reduce a quotient of Gamma products to an exact rational function.

    All Gamma factors must cancel after repeated application of the
    recurrence; this holds exactly when, within each (scale, shift mod 1)
    congruence class, the net exponents sum to zero.  Paired factors are
    matched largest shift against largest shift, which telescopes into the
    product of the intermediate linear factors.
    """
    net: dict[tuple[Fraction, Fraction], int] = {}
    for scale, shift, exp in numerator.factors:
        net[(scale, shift)] = net.get((scale, shift), 0) + exp
    for scale, shift, exp in denominator.factors:
        net[(scale, shift)] = net.get((scale, shift), 0) - exp

    sqrt_pi = numerator.sqrt_pi_power - denominator.sqrt_pi_power
    if sqrt_pi != 0:
        raise IrreducibleGammaQuotient(
            f"sqrt(pi) prefactor does not cancel (net power {sqrt_pi}/2)"
        )

    groups: dict[tuple[Fraction, Fraction], list[tuple[Fraction, int]]] = {}
    for (scale, shift), exp in net.items():
        if exp == 0:
            continue
        frac_part = shift - floor(shift)
        groups.setdefault((scale, frac_part), []).append((shift, exp))

    result = numerator.prefactor / denominator.prefactor
    for (scale, _), shifts in sorted(groups.items()):
        ups: list[Fraction] = []
        downs: list[Fraction] = []
        for shift, exp in shifts:
            (ups if exp > 0 else downs).extend([shift] * abs(exp))
        if len(ups) != len(downs):
            raise IrreducibleGammaQuotient(
                f"unbalanced Gamma factors at scale {rat_str(scale)}: "
                f"{len(ups)} numerator vs {len(downs)} denominator"
            )
        ups.sort(reverse=True)
        downs.sort(reverse=True)
        for a, b in zip(ups, downs):
            result = result * _pair_contribution(scale, a, b)
    return result
