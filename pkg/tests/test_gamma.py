from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from catalan_cf.gamma import (GammaExpansion, NotPalindromicError, b_polynomial,
                              full_gamma_identity_check, gamma_class, gamma_decompose,
                              gamma_multinomial, gamma_via_perms, mfs_orbit, mfs_representative,
                              phi_prime_S, phi_prime_x, phi_x, x_factorization)
from catalan_cf.permstats import ZERO_ZERO, as_perm, local_stats, vincular3
from catalan_cf.polyring import ONE, ZERO, MPoly, all_ones, p, q, t
from oracles import count_kinds, multinomial_gamma

SIGMA = as_perm("472589316")

# the displayed expansions of the Type B polynomials B_1 .. B_5
LISTED = {
    1: "1+t",
    2: "(1+t)^2+(p+q)t",
    3: "(1+t)^3+(p+2)(p+q)t(1+t)",
    4: "(1+t)^4+(p+q)(p^2+2p+3)t(1+t)^2+t^2(p^3+p+q)(p+q)",
    5: "(1+t)^5+(p+q)(p^3+2p^2+3p+4)t(1+t)^3+t^2(1+t)(p+q)(p^5+2p^4+2p^3+2p^2+(2q+3)p+3q)",
}


def test_decompose_examples():
    g = gamma_decompose(1 + 2 * t + t ** 2 + (p + q) * t)
    assert g.center2 == 2 and g.gammas == (ONE, p + q)
    g = gamma_decompose(t)
    assert g.center2 == 2 and g.gammas == (ZERO, ONE)
    with pytest.raises(NotPalindromicError):
        gamma_decompose(1 + 2 * t)
    with pytest.raises(NotPalindromicError):
        gamma_decompose(ZERO)


@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-5, 5), min_size=n // 2 + 1,
                                             max_size=n // 2 + 1))))
@settings(max_examples=60, deadline=None)
def test_decompose_reconstruct(case):
    n, gs = case
    gs[0] = gs[0] or 1
    f = GammaExpansion(n, tuple(MPoly.const(g) * (1 + p) for g in gs)).reconstruct()
    assert gamma_decompose(f).reconstruct() == f


@pytest.mark.parametrize("n", range(1, 6))
def test_listed_expansions(n):
    b = b_polynomial(n)
    assert b == MPoly.parse(LISTED[n])
    assert b.eval(all_ones()) == [2, 6, 20, 70, 252][n - 1]
    g = gamma_decompose(b)
    assert g.reconstruct() == b


def test_render():
    assert gamma_decompose(b_polynomial(2)).render() == "(1+t)^2 + (p + q)*t"
    assert gamma_decompose(b_polynomial(1)).render() == "(1+t)"


def test_x_factorization_examples():
    f = x_factorization(SIGMA, 3)
    assert (f.w1, f.w2, f.w3, f.w4) == ((4, 7, 2), (5, 8, 9), (), (1, 6))
    f = x_factorization(SIGMA, 9)
    assert f.w2 == f.w3 == ()
    f = x_factorization(SIGMA, 7)  # 7 is a peak
    assert f.w2 == f.w3 == ()


def test_hops():
    assert phi_x(SIGMA, 3) == as_perm("472358916")
    assert phi_prime_S(SIGMA, {3, 4, 5}) == as_perm("742389516")
    assert phi_prime_S(SIGMA, set()) == SIGMA
    img = phi_prime_S(SIGMA, {3, 4, 5})
    assert phi_prime_S(img, {3, 4, 5}) == SIGMA
    assert vincular3(SIGMA).total == vincular3(img).total == 9
    assert phi_x(SIGMA, 7) == SIGMA


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_x_involution(n):
    for s in permutations(range(1, n + 1)):
        for x in range(1, n + 1):
            assert phi_x(phi_x(s, x), x) == s
            assert phi_prime_x(phi_prime_x(s, x), x) == s


def test_orbits():
    orb = mfs_orbit(SIGMA)
    assert orb.representative == mfs_representative(SIGMA)
    assert local_stats(orb.representative, ZERO_ZERO).dd == 0
    assert len(orb.members) == 2 ** local_stats(orb.representative, ZERO_ZERO).da
    # alternating, no da and no dd: singleton orbit
    alt = (2, 1, 5, 3, 4)
    assert count_kinds(alt, 0)["da"] == count_kinds(alt, 0)["dd"] == 0
    assert mfs_orbit(alt).members == {alt}


def test_gamma_via_perms_examples():
    assert gamma_via_perms(3, 1) == p + q
    for n in range(1, 7):
        assert gamma_via_perms(n + 1, 0) == ONE
        assert gamma_class(n + 1, 0) == [tuple(range(1, n + 2))]
    assert gamma_via_perms(5, 2) == (p ** 3 + p + q) * (p + q)


@pytest.mark.parametrize("n", range(0, 8))
def test_gamma_oracle(n):
    for k in range(n // 2 + 1):
        assert gamma_via_perms(n + 1, k).eval(all_ones()) == multinomial_gamma(n, k)
        assert gamma_multinomial(n, k) == multinomial_gamma(n, k)


@pytest.mark.parametrize("n", range(1, 6))
def test_two_routes(n):
    g = gamma_decompose(b_polynomial(n))
    assert list(g.gammas) == [gamma_via_perms(n + 1, k) for k in range(n // 2 + 1)]


@pytest.mark.parametrize("n", range(0, 6))
def test_full_identity(n):
    assert full_gamma_identity_check(n)
