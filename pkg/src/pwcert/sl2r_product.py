"""Finite products SL(2,R)^d: multivariate intertwining polynomials and checker.

K-types are integer vectors of length d, the spectral parameter a vector of d
independent variables.  The intertwining polynomial factors coordinatewise,
so membership reduces to exact division by each univariate ladder factor in
its own variable, with a quotient that must be even in every variable.
The coordinate count d is a runtime parameter (d = 1 degenerates to the
univariate checker, d = 2 is the motivating case).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch, ParityMismatch
from .multipoly import MultiPoly, mpoly_div_in_var, mpoly_even_in_var
from .poly import Poly
from .sl2r import q_poly_r, q_roots_r

KTypeVec = tuple[int, ...]


def _check_pair(l: KTypeVec, n: KTypeVec) -> int:
    if len(l) != len(n):
        raise ArityMismatch(f"K-type vectors of length {len(l)} vs {len(n)}")
    if len(l) < 1:
        raise ArityMismatch("K-type vectors must have length >= 1")
    for i, (li, ni) in enumerate(zip(l, n)):
        if (li - ni) % 2 != 0:
            raise ParityMismatch(f"coordinate {i}: K-types {li} and {ni} differ in parity")
    return len(l)


def q_product(l: KTypeVec, n: KTypeVec) -> MultiPoly:
    """Product intertwining polynomial: q_{l_i, n_i} in variable i, multiplied out."""
    d = _check_pair(l, n)
    result = MultiPoly.const(d, 1)
    for i, (li, ni) in enumerate(zip(l, n)):
        qi = q_poly_r(li, ni)
        if qi.degree > 0:
            result = result * MultiPoly.from_univariate(qi, d, i)
    return result


@dataclass(frozen=True)
class ProductRootWitness:
    """phi is not divisible by the ladder factor (x_var - root)."""

    var: int
    root: Fraction


@dataclass(frozen=True)
class ProductOddWitness:
    """The full quotient has a term of odd exponent in the named variable."""

    var: int
    exponent: int


@dataclass(frozen=True)
class Level3AcceptProduct:
    h: MultiPoly
    accepted: bool = True


@dataclass(frozen=True)
class Level3RejectProduct:
    witness: ProductRootWitness | ProductOddWitness
    accepted: bool = False


def level3_check_product(
    phi: MultiPoly, l: KTypeVec, n: KTypeVec
) -> Level3AcceptProduct | Level3RejectProduct:
    """Certify phi = h * q_{l,n} with h even in every variable.

    Divides variable 0 upward (a fixed order; the result is order
    independent) one linear ladder factor at a time, so a failure is
    localized at a (variable, root) pair.
    """
    d = _check_pair(l, n)
    if phi.arity != d:
        raise ArityMismatch(f"phi has {phi.arity} variables, K-type vectors have {d}")
    h = phi
    for i, (li, ni) in enumerate(zip(l, n)):
        for root in q_roots_r(li, ni):
            quotient, remainder = mpoly_div_in_var(h, Poly((-root, 1)), i)
            if not remainder.is_zero:
                return Level3RejectProduct(ProductRootWitness(var=i, root=root))
            h = quotient
    for i in range(d):
        if not mpoly_even_in_var(h, i):
            exponent = min(e[i] for e in h.terms if e[i] % 2)
            return Level3RejectProduct(ProductOddWitness(var=i, exponent=exponent))
    return Level3AcceptProduct(h=h)
