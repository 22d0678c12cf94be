"""SL(2,C): weights, classification, ladder chains, algebra, checkers."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pwcert.errors import (
    NotInAlgebra,
    NotReduciblePoint,
    ParityMismatch,
    SrcDstMismatch,
    WeightNotInKType,
)
from pwcert.gammaprod import gamma_reduce
from pwcert.poly import Poly
from pwcert.ratfunc import RationalFunction
from pwcert.sl2c import (
    AlgebraAccept,
    AlgebraReject,
    GeneratorCoords,
    Level3AcceptC,
    Level3RejectC,
    SwapWitness,
    SymmetryWitness,
    WeightRootWitness,
    WeightedDiagMap,
    algebra_check,
    c_gamma_c,
    c_quotient_c,
    clebsch_gordan,
    diag_map,
    diamond,
    extend_interpolate,
    free_module_decompose,
    identity_map,
    level2_functional_check_c,
    level3_check_c,
    q_minus,
    q_nm_c,
    q_plus,
    q_roots_c,
    reducibility_c,
    reducibility_c_complex,
    synthesize,
    weights,
    zero_map,
)

LAM = Poly.variable()
MU = Poly.variable()


def rand_poly(rng, deg):
    return Poly([rng.randint(-9, 9) for _ in range(deg + 1)])


def rand_coords(rng, m, deg=4):
    return GeneratorCoords(m, tuple(rand_poly(rng, rng.randint(0, deg)) for _ in range(m + 1)))


def member_map(rng, n, m, deg=4):
    """Random accepted element: synthesized algebra element times the chain."""
    level = min(n, m)
    coords = rand_coords(rng, level, deg)
    h = synthesize(coords)
    chain = q_nm_c(n, m)
    comps = {k: h[k] * chain[k] for k in weights(level)}
    return WeightedDiagMap(n, m, comps), h, coords


# -- weights and Clebsch-Gordan ------------------------------------------------------


def test_weights_examples():
    assert weights(0) == [0]
    assert weights(2) == [-2, 0, 2]
    assert weights(3) == [-3, -1, 1, 3]


def test_clebsch_gordan_examples():
    assert clebsch_gordan(1, 1) == [2, 0]
    assert clebsch_gordan(0, 5) == [5]
    assert clebsch_gordan(2, 3) == [5, 3, 1]
    # dimension count oracle
    assert 3 * 4 == sum(t + 1 for t in clebsch_gordan(2, 3))


def test_clebsch_gordan_dimension_oracle_random():
    rng = random.Random(2)
    for _ in range(50):
        n, m = rng.randint(0, 12), rng.randint(0, 12)
        assert (n + 1) * (m + 1) == sum(t + 1 for t in clebsch_gordan(n, m))


# -- c-functions ------------------------------------------------------------------------


def test_c_quotient_examples():
    assert c_quotient_c(2, 0) == RationalFunction(LAM - 2, LAM + 2)
    assert c_quotient_c(7, 7) == RationalFunction.one()
    assert c_quotient_c(4, 0) == RationalFunction(
        Poly.from_roots([4, 2]), Poly.from_roots([-4, -2])
    )
    assert c_quotient_c(0, 4) == RationalFunction(
        Poly.from_roots([-4, -2]), Poly.from_roots([4, 2])
    )


def test_c_gamma_examples():
    assert c_gamma_c(0, 0).factors == (
        (Fraction(1, 2), Fraction(0), 1),
        (Fraction(1, 2), Fraction(1), -1),
    )
    with pytest.raises(WeightNotInKType):
        c_gamma_c(1, 2)
    with pytest.raises(WeightNotInKType):
        c_gamma_c(2, 1)


def test_gamma_consistency_all_weights_up_to_12():
    for n in range(0, 13):
        for m in range(n % 2, 13, 2):
            for sigma in range(-min(n, m), min(n, m) + 1, 2):
                assert gamma_reduce(c_gamma_c(n, sigma), c_gamma_c(m, sigma)) == c_quotient_c(n, m)


# -- reducibility and diamonds ------------------------------------------------------------


def test_reducibility_examples():
    verdict = reducibility_c(0, 2)
    assert verdict.reducible and verdict.fm == 0 and verdict.fn == 0
    assert verdict.finite_dim_ktypes == (0,)
    assert verdict.socle_is_R

    assert not reducibility_c(1, 2).reducible

    verdict = reducibility_c(0, 4)
    assert verdict.reducible and (verdict.fm, verdict.fn) == (1, 1)
    assert verdict.finite_dim_ktypes == (2, 0)
    assert (verdict.fm + 1) * (verdict.fn + 1) == sum(t + 1 for t in verdict.finite_dim_ktypes)


def test_reducibility_negative_lambda_and_sigma():
    verdict = reducibility_c(-2, -6)
    assert verdict.reducible
    assert verdict.socle_is_R is False
    assert (verdict.fm, verdict.fn) == (1, 3)
    assert verdict.finite_dim_ktypes == (4, 2)


def test_reducibility_partition():
    for sigma in range(-6, 7):
        for lam in range(-8, 9):
            verdict = reducibility_c(sigma, lam)
            if not verdict.reducible:
                continue
            for t in range(0, 30):
                in_h = verdict.h_contains(t)
                in_f = verdict.f_contains(t)
                in_r = verdict.r_contains(t)
                assert in_h == (in_f or in_r)
                assert not (in_f and in_r)


def test_reducibility_non_real_and_non_integral():
    assert not reducibility_c(0, Fraction(5, 2)).reducible
    assert not reducibility_c_complex(0, 2 + 1j).reducible
    assert reducibility_c_complex(0, 2 + 0j).reducible


def test_diamond_example():
    d = diamond(0, 2)
    assert d.right == (0, 2) and d.left == (0, -2)
    assert d.top == (2, 0) and d.bottom == (-2, 0)
    assert ("L", (-2, 0), (0, 2)) == (d.arrows[0].name, d.arrows[0].src, d.arrows[0].dst)
    assert len(d.arrows) == 6
    d = diamond(2, 4)
    assert set(d.vertices) == {(2, 4), (-2, -4), (4, 2), (-4, -2)}
    with pytest.raises(NotReduciblePoint):
        diamond(1, 2)


# -- ladder operators ------------------------------------------------------------------


def test_q_plus_examples():
    assert q_plus(0).components == {0: LAM + 2}
    assert q_plus(1).components == {-1: LAM + 3, 1: LAM + 3}
    assert q_plus(2).components == {-2: LAM + 4, 0: LAM + 4, 2: LAM + 4}


def test_q_minus_examples():
    assert q_minus(0).components == {0: (LAM - 2) * 4}
    assert q_minus(1)[1] == (LAM - 3) * 8
    assert q_minus(2)[2] == (LAM - 4) * 12
    assert q_minus(2)[-2] == (LAM - 4) * 12


def test_q_plus_q_minus_identity():
    for m in range(0, 11):
        product = q_minus(m).then(q_plus(m))  # E_{m+2} -> E_m -> E_{m+2}
        for k in weights(m):
            d = (m + 2) ** 2 - k * k
            assert product[k] == (LAM**2 - (m + 2) ** 2) * d


def test_q_nm_examples():
    assert q_nm_c(3, 3) == identity_map(3)
    assert q_nm_c(0, 4).components == {0: (LAM + 2) * (LAM + 4)}
    assert q_nm_c(2, 0).components == {0: (LAM - 2) * 4}


def test_q_nm_chain_consistency():
    # Closed form against literal composition of the ladder maps.
    for n in range(0, 9):
        for m in range(n % 2, 9, 2):
            if n < m:
                chain = q_plus(n)
                for j in range(n + 2, m, 2):
                    chain = chain.then(q_plus(j))
            elif n > m:
                chain = q_minus(n - 2)
                for j in range(n - 4, m - 1, -2):
                    chain = chain.then(q_minus(j))
            else:
                chain = identity_map(n)
            assert chain == q_nm_c(n, m), (n, m)


# -- algebra membership ---------------------------------------------------------------


def test_algebra_accept_casimir():
    phi = WeightedDiagMap(4, 4, {k: Poly([k * k, 0, 1]) for k in weights(4)})
    assert isinstance(algebra_check(phi), AlgebraAccept)


def test_algebra_accept_asymmetric_example():
    phi = WeightedDiagMap(1, 1, {1: LAM**2 + 3 * LAM, -1: LAM**2 - 3 * LAM})
    assert isinstance(algebra_check(phi), AlgebraAccept)
    # direct evaluation oracle for the swap condition
    assert (LAM**2 + 3 * LAM)(Fraction(-1)) == (LAM**2 - 3 * LAM)(Fraction(1))


def test_algebra_reject_odd():
    phi = WeightedDiagMap(1, 1, {1: LAM, -1: LAM})
    verdict = algebra_check(phi)
    assert isinstance(verdict, AlgebraReject)
    assert verdict.witness == SymmetryWitness(weight=1)


def test_algebra_reject_swap():
    phi = WeightedDiagMap(2, 2, {-2: LAM**2, 0: Poly.one(), 2: LAM**2})
    verdict = algebra_check(phi)
    assert isinstance(verdict, AlgebraReject)
    assert isinstance(verdict.witness, SwapWitness)


def test_algebra_src_dst_error():
    with pytest.raises(SrcDstMismatch):
        algebra_check(q_plus(2))


# -- free module decomposition ------------------------------------------------------------


def test_decompose_examples():
    phi = diag_map(0, 0, LAM**4)
    assert free_module_decompose(phi).h == (MU**2,)

    phi = WeightedDiagMap(1, 1, {1: LAM**2 + 3 * LAM, -1: LAM**2 - 3 * LAM})
    coords = free_module_decompose(phi)
    assert coords.h == (MU - 1, Poly.const(3))

    assert free_module_decompose(zero_map(3, 3)).h == (Poly.zero(),) * 4


def test_synthesize_examples():
    assert synthesize(GeneratorCoords(0, (Poly.one(),))) == diag_map(0, 0, Poly.one())
    phi = synthesize(GeneratorCoords(1, (MU - 1, Poly.const(3))))
    assert phi[1] == LAM**2 + 3 * LAM
    assert phi[-1] == LAM**2 - 3 * LAM
    assert synthesize(GeneratorCoords(2, (Poly.zero(),) * 3)).is_zero


def test_decompose_requires_algebra():
    with pytest.raises(NotInAlgebra):
        free_module_decompose(WeightedDiagMap(1, 1, {1: LAM, -1: LAM}))


def test_round_trip_500():
    rng = random.Random(101)
    for _ in range(500):
        coords = rand_coords(rng, rng.randint(0, 8))
        assert free_module_decompose(synthesize(coords)) == coords


coeff_lists = st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=5)


@given(st.integers(0, 6), st.data())
@settings(max_examples=80, deadline=None)
def test_round_trip_hypothesis(m, data):
    h = tuple(Poly(data.draw(coeff_lists)) for _ in range(m + 1))
    coords = GeneratorCoords(m, h)
    assert free_module_decompose(synthesize(coords)) == coords


def test_level3_zero_map_accepted():
    result = level3_check_c(zero_map(2, 6))
    assert isinstance(result, Level3AcceptC)
    assert result.h.is_zero
    assert all(p.is_zero for p in result.coords.h)


def test_synthesize_always_in_algebra():
    rng = random.Random(7)
    for _ in range(100):
        phi = synthesize(rand_coords(rng, rng.randint(0, 8)))
        assert isinstance(algebra_check(phi), AlgebraAccept)


def test_decompose_linear():
    rng = random.Random(13)
    for _ in range(25):
        m = rng.randint(0, 6)
        a, b = rand_coords(rng, m), rand_coords(rng, m)
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        phi = synthesize(a) + synthesize(b).scale(c)
        combined = free_module_decompose(phi)
        for l in range(m + 1):
            assert combined.h[l] == a.h[l] + b.h[l] * c


# -- Level 3 ---------------------------------------------------------------------------


def test_level3_round_trip_example():
    rng = random.Random(19)
    coords = GeneratorCoords(1, (MU, Poly.const(2)))
    h = synthesize(coords)
    chain = q_nm_c(1, 3)
    phi = WeightedDiagMap(1, 3, {k: h[k] * chain[k] for k in weights(1)})
    result = level3_check_c(phi)
    assert isinstance(result, Level3AcceptC)
    assert result.h == h
    assert result.coords == coords


def test_level3_division_reject():
    phi = WeightedDiagMap(0, 2, {0: LAM + 3})
    result = level3_check_c(phi)
    assert isinstance(result, Level3RejectC)
    assert result.witness == WeightRootWitness(weight=0, root=Fraction(-2), value=Fraction(1))


def test_level3_identity_case():
    phi = WeightedDiagMap(2, 2, {k: Poly([k * k, 0, 1]) for k in weights(2)})
    result = level3_check_c(phi)
    assert isinstance(result, Level3AcceptC)
    assert result.h == phi


def test_level3_parity_error():
    with pytest.raises(ParityMismatch):
        level3_check_c(WeightedDiagMap(0, 1, {}))


def test_level3_random_members_and_functional_equation():
    rng = random.Random(23)
    for _ in range(200):
        n, m = rng.randint(0, 8), rng.randint(0, 8)
        if (n - m) % 2:
            m = m + 1 if m < 8 else m - 1
        phi, h, coords = member_map(rng, n, m)
        result = level3_check_c(phi)
        assert isinstance(result, Level3AcceptC)
        assert result.h == h and result.coords == coords
        # cleared-denominator c-quotient identity on every weight
        quotient = c_quotient_c(m, n)
        sign = -1 if ((m - n) // 2) % 2 else 1
        for k in weights(min(n, m)):
            assert phi[-k].reflect() * quotient.den == quotient.num * phi[k] * sign


def test_level3_polynomial_h_degree_bookkeeping():
    # Polynomial inputs produce polynomial quotients with the expected degree drop.
    rng = random.Random(29)
    for _ in range(50):
        n, m = 2 * rng.randint(0, 4), 2 * rng.randint(0, 4)
        phi, h, _ = member_map(rng, n, m)
        result = level3_check_c(phi)
        assert isinstance(result, Level3AcceptC)
        steps = abs(n - m) // 2
        for k in weights(min(n, m)):
            if not phi[k].is_zero:
                assert phi[k].degree == result.h[k].degree + steps


# -- interpolation extension -----------------------------------------------------------


def test_extend_casimir():
    cas = WeightedDiagMap(1, 1, {k: Poly([k * k, 0, 1]) for k in weights(1)})
    ext = extend_interpolate(cas, 3)
    assert ext.restrict(1) == cas.components
    assert isinstance(algebra_check(ext), AlgebraAccept)
    # the new component interpolates (i, h_i(3)) over i in {-1, 1}
    assert ext[3](Fraction(1)) == cas[1](Fraction(3))
    assert ext[3](Fraction(-1)) == cas[-1](Fraction(3))


def test_extend_constant():
    const = diag_map(0, 0, Poly.const(5))
    ext = extend_interpolate(const, 4)
    assert all(p == Poly.const(5) for p in ext.components.values())


def test_extend_identity_and_errors():
    phi = WeightedDiagMap(2, 2, {k: Poly([k * k, 0, 1]) for k in weights(2)})
    assert extend_interpolate(phi, 2) == phi
    with pytest.raises(ParityMismatch):
        extend_interpolate(phi, 5)
    with pytest.raises(NotInAlgebra):
        extend_interpolate(WeightedDiagMap(1, 1, {1: LAM, -1: LAM}), 3)


def test_extend_random_restriction_and_membership():
    rng = random.Random(31)
    for _ in range(40):
        m = rng.randint(0, 5)
        phi = synthesize(rand_coords(rng, m, deg=3))
        target = m + 2 * rng.randint(1, 3)
        ext = extend_interpolate(phi, target)
        assert ext.restrict(m) == phi.components
        assert isinstance(algebra_check(ext), AlgebraAccept)


def test_freeness_on_non_synthesized_elements():
    # Interpolation extensions are algebra elements that were not built by
    # synthesis; the generator coordinates must still reproduce them exactly.
    rng = random.Random(43)
    for _ in range(40):
        m = rng.randint(0, 4)
        base = synthesize(rand_coords(rng, m, deg=3))
        ext = extend_interpolate(base, m + 2 * rng.randint(1, 2))
        assert synthesize(free_module_decompose(ext)) == ext


# -- Level 2 scalar shadow ---------------------------------------------------------------


def test_level2_shadow_casimir_passes():
    psi = {k: Poly([k * k, 0, 1]) for k in weights(4)}
    report = level2_functional_check_c(psi, 4)
    assert report.passed and report.partner == 4


def test_level2_shadow_images_pass_any_partner():
    rng = random.Random(37)
    for n in (0, 1, 2, 5):
        for m in (n, n + 2, n + 4, max(n - 2, n % 2)):
            phi, _, _ = member_map(rng, n, m)
            psi = {k: phi[k] for k in weights(min(n, m))}
            # pad to the full weight set of n with zeros (they carry no data)
            report = level2_functional_check_c(psi, n)
            assert report.passed, (n, m)
            if not all(p.is_zero for p in psi.values()):
                assert report.partner == m


def test_level2_shadow_odd_scalar_fails():
    report = level2_functional_check_c({0: LAM}, 0)
    assert not report.passed


def test_level2_shadow_weight_error():
    with pytest.raises(WeightNotInKType):
        level2_functional_check_c({1: LAM}, 0)


def test_level2_shadow_one_sided_zero_fails():
    psi = {2: LAM + 2, -2: Poly.zero(), 0: Poly.zero()}
    report = level2_functional_check_c(psi, 2)
    assert not report.passed


def test_level2_shadow_inconsistent_ratio_fails():
    # weight 0 looks like a q_{0,2} image, weight +/-2 like an identity image
    psi = {0: LAM + 2, 2: Poly.one(), -2: Poly.one()}
    report = level2_functional_check_c(psi, 2)
    assert not report.passed


def test_level2_shadow_sign_violation_fails():
    # Right ladder shape but an extra odd factor flips the required sign.
    ladder = c_quotient_c(4, 0).den  # (x+2)(x+4)
    assert level2_functional_check_c({0: ladder}, 0).passed
    report = level2_functional_check_c({0: ladder * LAM}, 0)
    assert not report.passed


def test_round_trip_beyond_acceptance_bound():
    rng = random.Random(59)
    coords = GeneratorCoords(
        14, tuple(rand_poly(rng, 6) for _ in range(15))
    )
    assert free_module_decompose(synthesize(coords)) == coords
