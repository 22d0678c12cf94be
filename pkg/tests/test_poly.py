"""Univariate polynomial core: division, parity, composition, interpolation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pwcert.errors import DivisionByZeroPoly
from pwcert.poly import (
    Poly,
    compose,
    even_part_in,
    lagrange_interpolate,
    parity_split,
    poly_div_rem,
    poly_gcd,
)

coeffs = st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=13)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_trailing_zeros_stripped():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]).is_zero
    assert Poly([0]).degree == -1


def test_div_rem_examples():
    lam = Poly.variable()
    q, r = poly_div_rem(lam**2 - 1, lam - 1)
    assert (q, r) == (lam + 1, Poly.zero())
    q, r = poly_div_rem(lam + 2, lam + 1)
    assert (q, r) == (Poly.one(), Poly.one())
    # expand-then-divide round trip
    f = (lam**2 + 1) * (lam + 1)
    q, r = poly_div_rem(f, lam + 1)
    assert (q, r) == (lam**2 + 1, Poly.zero())
    assert q * (lam + 1) + r == f


def test_div_by_zero_raises():
    with pytest.raises(DivisionByZeroPoly):
        poly_div_rem(Poly([1, 2]), Poly.zero())


@given(coeffs, coeffs)
@settings(max_examples=200)
def test_div_rem_reconstructs(fc, gc):
    f, g = Poly(fc), Poly(gc)
    if g.is_zero:
        return
    q, r = poly_div_rem(f, g)
    assert q * g + r == f
    assert r.degree < g.degree or r.is_zero


def test_parity_split_examples():
    lam = Poly.variable()
    assert parity_split(lam**2 + 3 * lam) == (lam**2, 3 * lam)
    assert parity_split(Poly.zero()) == (Poly.zero(), Poly.zero())
    assert parity_split(Poly.const(5)) == (Poly.const(5), Poly.zero())


@given(coeffs)
def test_parity_split_is_projection(fc):
    f = Poly(fc)
    even, odd = parity_split(f)
    assert even + odd == f
    assert even.reflect() == even
    assert odd.reflect() == -odd
    assert parity_split(even) == (even, Poly.zero())


def test_compose_examples():
    mu, lam = Poly.variable(), Poly.variable()
    assert compose(mu**2, lam**2 + 1) == lam**4 + 2 * lam**2 + 1
    assert compose(mu - 1, lam**2 + 1) == lam**2
    assert compose(Poly.one(), lam**5 - 3) == Poly.one()


@given(coeffs, coeffs, rationals)
@settings(max_examples=150)
def test_compose_evaluates(hc, pc, x):
    h, p = Poly(hc), Poly(pc)
    assert compose(h, p)(x) == h(p(x))


def test_even_part_inversion():
    lam = Poly.variable()
    f = 3 * lam**4 - 2 * lam**2 + 7
    h = even_part_in(f, Fraction(4))
    assert compose(h, lam**2 + 4) == f


def test_gcd_monic():
    lam = Poly.variable()
    f = (lam - 1) * (lam + 2) * 3
    g = (lam - 1) * (lam - 5) * 7
    assert poly_gcd(f, g) == lam - 1


def test_lagrange_exact():
    pts = [(-2, 5), (0, 1), (1, 4), (3, -2)]
    p = lagrange_interpolate(pts)
    assert p.degree <= 3
    for x, y in pts:
        assert p(Fraction(x)) == y


def test_scale_and_reflect():
    lam = Poly.variable()
    f = lam**3 - 2 * lam + 1
    assert f.reflect() == -(lam**3) + 2 * lam + 1
    assert f.scale_variable(2)(Fraction(1)) == f(Fraction(2))
