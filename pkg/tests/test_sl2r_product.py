"""SL(2,R)^d: product ladder polynomials and the multivariate checker."""

import itertools
import random
from fractions import Fraction

import pytest

from pwcert.errors import ArityMismatch, ParityMismatch
from pwcert.multipoly import MultiPoly
from pwcert.poly import Poly
from pwcert.sl2r import level3_check_r, q_poly_r
from pwcert.sl2r_product import (
    Level3AcceptProduct,
    Level3RejectProduct,
    ProductOddWitness,
    ProductRootWitness,
    level3_check_product,
    q_product,
)


def inject(p: Poly, d: int, var: int) -> MultiPoly:
    return MultiPoly.from_univariate(p, d, var)


def random_even_mpoly(rng, d, per_var_degree=6, terms=4) -> MultiPoly:
    out = MultiPoly.zero(d)
    for _ in range(terms):
        exps = tuple(2 * rng.randint(0, per_var_degree // 2) for _ in range(d))
        out = out + MultiPoly(d, {exps: rng.randint(-9, 9)})
    return out


def test_q_product_examples():
    assert q_product((3, 1), (1, 1)) == inject(Poly([1, 1]), 2, 0)
    assert q_product((4, -2), (4, -2)) == MultiPoly.const(2, 1)
    expected = inject(Poly([1, 1]), 2, 0) * inject(Poly([1, 1]), 2, 1)
    assert q_product((3, 3), (1, 1)) == expected


def test_q_product_errors():
    with pytest.raises(ArityMismatch):
        q_product((1, 1), (1,))
    with pytest.raises(ParityMismatch) as err:
        q_product((2, 1), (1, 1))
    assert "coordinate 0" in str(err.value)


def test_check_accept_example():
    d2 = 2
    phi = (inject(Poly([0, 0, 1]), d2, 0) + inject(Poly([0, 0, 1]), d2, 1)) \
        * inject(Poly([1, 1]), d2, 0) * inject(Poly([1, 1]), d2, 1)
    result = level3_check_product(phi, (3, 3), (1, 1))
    assert isinstance(result, Level3AcceptProduct)
    assert result.h == inject(Poly([0, 0, 1]), d2, 0) + inject(Poly([0, 0, 1]), d2, 1)


def test_check_odd_quotient_reject():
    phi = inject(Poly([0, 1]), 2, 0) * inject(Poly([1, 1]), 2, 0) * inject(Poly([1, 1]), 2, 1)
    result = level3_check_product(phi, (3, 3), (1, 1))
    assert isinstance(result, Level3RejectProduct)
    assert result.witness == ProductOddWitness(var=0, exponent=1)


def test_check_zero_accepted():
    result = level3_check_product(MultiPoly.zero(2), (3, 3), (1, 1))
    assert isinstance(result, Level3AcceptProduct)
    assert result.h.is_zero


def test_check_root_witness_localized():
    phi = inject(Poly([1, 1]), 2, 1)  # divisible in var 1, not in var 0
    result = level3_check_product(phi, (3, 3), (1, 1))
    assert isinstance(result, Level3RejectProduct)
    assert result.witness == ProductRootWitness(var=0, root=Fraction(-1))


def test_round_trip_random_d_up_to_3():
    rng = random.Random(29)
    for _ in range(60):
        d = rng.randint(1, 3)
        l = tuple(rng.randint(-5, 5) for _ in range(d))
        n = tuple(li - 2 * rng.randint(-2, 2) for li in l)
        h = random_even_mpoly(rng, d)
        phi = h * q_product(l, n)
        result = level3_check_product(phi, l, n)
        assert isinstance(result, Level3AcceptProduct), (l, n)
        assert result.h == h


def test_d1_degenerates_to_univariate():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(-8, 8)
        m = n - 2 * rng.randint(-3, 3)
        coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(0, 9))]
        phi = Poly(coeffs)
        uni = level3_check_r(phi, n, m)
        multi = level3_check_product(MultiPoly.from_univariate(phi, 1, 0), (n,), (m,))
        assert uni.accepted == multi.accepted
        if uni.accepted:
            assert MultiPoly.from_univariate(uni.h, 1, 0) == multi.h


def test_tensor_consistency():
    # phi = f(x0) g(x1) with both factors accepted componentwise: the product
    # is accepted and its quotient factors accordingly.
    rng = random.Random(37)
    for _ in range(40):
        n1, m1 = 3, 1
        n2, m2 = rng.choice([(-4, 0), (2, 2), (5, -1)])
        hf = Poly([rng.randint(-9, 9) if i % 2 == 0 else 0 for i in range(5)])
        hg = Poly([rng.randint(-9, 9) if i % 2 == 0 else 0 for i in range(5)])
        f = hf * q_poly_r(n1, m1)
        g = hg * q_poly_r(n2, m2)
        phi = inject(f, 2, 0) * inject(g, 2, 1)
        result = level3_check_product(phi, (n1, n2), (m1, m2))
        assert isinstance(result, Level3AcceptProduct)
        assert result.h == inject(hf, 2, 0) * inject(hg, 2, 1)


def test_order_independence_by_variable_permutation():
    # Relabeling variables permutes the division order; results must agree.
    rng = random.Random(41)
    for _ in range(20):
        d = 3
        l = tuple(rng.randint(-4, 4) for _ in range(d))
        n = tuple(li - 2 * rng.randint(-1, 1) for li in l)
        h = random_even_mpoly(rng, d, terms=3)
        phi = h * q_product(l, n)
        base = level3_check_product(phi, l, n)
        for perm in itertools.permutations(range(d)):
            phi_p = MultiPoly(d, {tuple(e[perm[i]] for i in range(d)): c
                                  for e, c in phi.terms.items()})
            l_p = tuple(l[perm[i]] for i in range(d))
            n_p = tuple(n[perm[i]] for i in range(d))
            result = level3_check_product(phi_p, l_p, n_p)
            assert result.accepted == base.accepted
            assert isinstance(result, Level3AcceptProduct)
            back = MultiPoly(d, {tuple(e[perm.index(i)] for i in range(d)): c
                                 for e, c in result.h.terms.items()})
            assert back == base.h
