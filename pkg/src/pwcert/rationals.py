"""Exact rational scalars.

``fractions.Fraction`` already provides arbitrary-precision rationals in
lowest terms with positive denominator, which is exactly the coefficient
domain needed for decidable zero tests.  This module only adds the string
forms used throughout the JSON interfaces: ``"p/q"``, or ``"p"`` when the
denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction

RatLike = Fraction | int | str


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Format a rational as ``"p/q"``, or ``"p"`` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def is_half_integer(value: Fraction) -> bool:
    """True for odd multiples of 1/2 (denominator exactly 2)."""
    return value.denominator == 2
