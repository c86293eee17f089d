"""The thirteen acceptance criteria, one test each, with their time limits.

Every check compares exact integers or polynomials.  Expected values come
from the oracles in ``oracles.py`` or from the published tables.
"""
import random
from itertools import permutations
from math import comb

import pytest

from catalan_cf import kernels
from catalan_cf.contfrac import (bar_c_sfraction, catalan_jfraction, contract, jfraction_series,
                                 named_cf, sequence_sfraction, sfraction_series,
                                 tilde_c_sfraction)
from catalan_cf.gamma import (b_polynomial, full_gamma_identity_check, gamma_decompose,
                              gamma_via_perms, phi_prime_S)
from catalan_cf.pathdiag import (diagrams, laguerre_histories, path_sum, phi1, phi1_inv, phi2,
                                 phi2_inv, phi3, phi3_inv, phi_fv, phi_fv_inv, psi_fv, psi_fv_inv)
from catalan_cf.patternclass import (PatternClass, class_polynomial, generate_class,
                                     insertion_decode, insertion_encode, parse_word)
from catalan_cf.permstats import (ZERO_INF, ZERO_ZERO, as_perm, classify, des, hat_2_13,
                                  vincular2, vincular3)
from catalan_cf.polyring import MPoly, all_ones
from catalan_cf.verify import mfs_checks
from oracles import catalan, multinomial_gamma, sfraction_integer_series

pytestmark = pytest.mark.acceptance

BAR_C_ROWS = {1: [1], 2: [2], 3: [4, 1], 4: [8, 5, 1], 5: [16, 17, 7, 2]}
TILDE_C_ROWS = {1: [1], 2: [1, 1], 3: [1, 3, 1], 4: [1, 6, 5, 2], 5: [1, 10, 15, 12, 3, 1]}
LISTED_GAMMAS = {
    1: ["1"],
    2: ["1", "p+q"],
    3: ["1", "(p+2)(p+q)"],
    4: ["1", "(p+q)(p^2+2p+3)", "(p^3+p+q)(p+q)"],
    5: ["1", "(p+q)(p^3+2p^2+3p+4)", "(p+q)(p^5+2p^4+2p^3+2p^2+(2q+3)p+3q)"],
}
B_AT_UVW1 = {"u": 1, "v": 1, "w": 1}


def first_bad(pairs):
    """``pairs`` yields (label, got, want); returns (True, "") or (False, first mismatch)."""
    for label, got, want in pairs:
        if got != want:
            return False, f"{label}: got {got}, want {want}"
    return True, ""


def q_rows(series, nmax):
    return {n: [c.eval(all_ones()) for c in series[n].coefficients_in("q")]
            for n in range(1, nmax + 1)}


def test_01_catalan(acceptance):
    def check():
        s = jfraction_series(named_cf("typeA").specialize(all_ones()), 12)
        return first_bad((n, c.eval(all_ones()), catalan(n)) for n, c in enumerate(s.coeffs))
    acceptance(1, "Catalan sanity n<=12", 1, check)


def test_02_q_catalan_tables(acceptance):
    def check():
        A = named_cf("typeA")
        left_j = q_rows(jfraction_series(A.specialize({"p": 1, "t": 1, "u": 1, "w": 1}), 5), 5)
        right_j = q_rows(jfraction_series(A.specialize(
            {"p": MPoly.var("q"), "q": 1, "t": 1, "u": 1, "w": 1}), 5), 5)
        left_s = q_rows(sfraction_series(bar_c_sfraction(), 5), 5)
        right_s = q_rows(sfraction_series(tilde_c_sfraction(), 5), 5)
        return first_bad([("left J", left_j, BAR_C_ROWS), ("right J", right_j, TILDE_C_ROWS),
                          ("left S", left_s, BAR_C_ROWS), ("right S", right_s, TILDE_C_ROWS)])
    acceptance(2, "q-Catalan coefficient tables n=1..5", 1, check)


def _cf_vs_class(name, c, nmax):
    series = jfraction_series(named_cf(name), nmax)
    return first_bad((n, class_polynomial(n, c), series[n]) for n in range(nmax + 1))


def test_03_type_a(acceptance):
    acceptance(3, "Type A CF = 321-avoiders, five variables, n<=9", 30,
               lambda: _cf_vs_class("typeA", PatternClass.A321, 9))


def test_04_type_b(acceptance):
    def check():
        ok, detail = _cf_vs_class("typeB", PatternClass.B4, 7)
        if not ok:
            return ok, detail
        s = jfraction_series(named_cf("typeB").specialize(all_ones()), 10)
        return first_bad((n, c.eval(all_ones()), comb(2 * n, n)) for n, c in enumerate(s.coeffs))
    acceptance(4, "Type B CF = B4 class, six variables n<=7; binom(2n,n) n<=10", 60, check)


def test_05_type_c(acceptance):
    acceptance(5, "Type C CF = 312-avoiders, five variables, n<=8", 30,
               lambda: _cf_vs_class("typeC", PatternClass.A312, 8))


def test_06_listed_expansions(acceptance):
    def check():
        series = jfraction_series(named_cf("typeB").specialize(B_AT_UVW1), 5)
        rows = []
        for n in range(1, 6):
            want = [MPoly.parse(g) for g in LISTED_GAMMAS[n]]
            rows.append((f"n={n} cf", list(gamma_decompose(series[n]).gammas), want))
            rows.append((f"n={n} class", list(gamma_decompose(b_polynomial(n)).gammas), want))
        return first_bad(rows)
    acceptance(6, "listed gamma expansions B_1..B_5", 1, check)


def test_07_two_route_gamma(acceptance):
    def check():
        rows = []
        for n in range(1, 8):
            g = gamma_decompose(b_polynomial(n))
            rows.append((f"n={n}", list(g.gammas),
                         [gamma_via_perms(n + 1, k) for k in range(n // 2 + 1)]))
        rows += [(f"identity n={n}", full_gamma_identity_check(n), True) for n in range(7)]
        return first_bad(rows)
    acceptance(7, "gamma via CF = gamma via permutations n<=7; six-variable identity n<=6", 60,
               check)


def test_08_gamma_oracle(acceptance):
    def check():
        return first_bad(((n, k), gamma_via_perms(n + 1, k).eval(all_ones()),
                          multinomial_gamma(n, k))
                         for n in range(10) for k in range(n // 2 + 1))
    acceptance(8, "gamma(1,1) = n!/(k!k!(n-2k)!) n<=9", 60, check)


def _a321_monomial(s):
    kinds = list(classify(s, ZERO_INF).values())
    return (hat_2_13(s), vincular2(s, "31-2"), des(s), kinds.count("da"), 0, kinds.count("val"))


def _class_monomial(s, p_exp, q_exp):
    kinds = list(classify(s, ZERO_ZERO).values())
    return (p_exp, q_exp, des(s), kinds.count("da"), kinds.count("dd"), kinds.count("val"))


def _b4_monomial(s):
    return _class_monomial(s, vincular2(s, "2-13"), vincular2(s, "31-2"))


def _a312_monomial(s):
    return _class_monomial(s, 0, vincular2(s, "2-13"))


def _check_bijection(fwd, inv, c, kind, shift, monomial, nmax):
    for n in range(nmax + 1):
        images = set()
        for s in generate_class(n + shift, c):
            d = fwd(s)
            if inv(d) != s:
                return False, f"{fwd.__name__}: inverse fails on {s}"
            if d.weight() != MPoly.from_terms([(monomial(s), 1)]):
                return False, f"{fwd.__name__}: weight of {s} is {d.weight()}"
            images.add(d)
        if images != set(diagrams(n, kind)):
            return False, f"{fwd.__name__}: not onto the type {kind} diagrams at n={n}"
    return True, ""


def _check_fv(nmax):
    for n in range(1, nmax + 1):
        imgs = set()
        for s in permutations(range(1, n + 2)):
            h = psi_fv(s)
            kinds = classify(s, ZERO_ZERO)
            want = tuple(vincular2(s, "2-13", at=s.index(i) + 1) for i in range(1, n + 1))
            steps = {"val": "U", "pk": "D", "da": "Lb", "dd": "Lr"}
            if (psi_fv_inv(h) != s or h.p != want
                    or h.path != tuple(steps[kinds[i]] for i in range(1, n + 1))):
                return False, f"psi_fv fails on {s}"
            imgs.add(h)
        if imgs != set(laguerre_histories(n)):
            return False, f"psi_fv not onto at n={n}"
        imgs = set()
        for s in permutations(range(1, n + 1)):
            h = phi_fv(s)
            want = tuple(vincular2(s, "2-31", at=s.index(i) + 1) for i in range(1, n + 1))
            if phi_fv_inv(h) != s or h.p != want:
                return False, f"phi_fv fails on {s}"
            imgs.add(h)
        if imgs != set(laguerre_histories(n, restricted=True)):
            return False, f"phi_fv not onto at n={n}"
    return True, ""


def test_09_bijections(acceptance):
    def check():
        for args in ((phi1, phi1_inv, PatternClass.A321, "A", 0, _a321_monomial, 8),
                     (phi2, phi2_inv, PatternClass.B4, "B", 1, _b4_monomial, 7),
                     (phi3, phi3_inv, PatternClass.A312, "C", 1, _a312_monomial, 8)):
            ok, detail = _check_bijection(*args)
            if not ok:
                return ok, detail
        ok, detail = _check_fv(6)
        if not ok:
            return ok, detail
        rows = []
        for kind, name in (("A", "typeA"), ("B", "typeB"), ("C", "typeC")):
            series = jfraction_series(named_cf(name), 8)
            rows += [(f"{kind} n={n}", path_sum(n, kind), series[n]) for n in range(9)]
        return first_bad(rows)
    acceptance(9, "path bijections and path sums", 120, check)


def test_10_grammar(acceptance):
    def check():
        rows = []
        for c, top in ((PatternClass.A321, 9), (PatternClass.B4, 8), (PatternClass.A312, 9)):
            for n in range(top + 1):
                rows.append((f"{c.value} n={n}", sorted(generate_class(n, c)),
                             list(kernels.avoiders(n, list(c.patterns)))))
        ok, detail = first_bad(rows)
        if not ok:
            return ok, detail
        word = parse_word("m1,m1,l2,f1,f2,f1")
        if insertion_encode((4, 2, 3, 6, 1, 5)) != word or insertion_decode(word) != (4, 2, 3, 6, 1, 5):
            return False, "423615 example"
        for n in range(9):
            for s in permutations(range(1, n + 1)):
                if insertion_decode(insertion_encode(s)) != s:
                    return False, f"round trip fails on {s}"
        return True, ""
    acceptance(10, "grammar = brute force; encode/decode round trip n<=8", 60, check)


def test_11_class_equality(acceptance):
    def check():
        pats = list(PatternClass.B4.patterns)
        return first_bad((n, list(kernels.vincular_avoiders(n)), list(kernels.avoiders(n, pats)))
                         for n in range(10))
    acceptance(11, "classical = vincular class n<=9", 120, check)


def test_12_mfs(acceptance):
    def check():
        sigma = as_perm("472589316")
        img = phi_prime_S(sigma, {3, 4, 5})
        rows = [("worked image", img, as_perm("742389516")),
                ("vincular3 before", vincular3(sigma).total, 9),
                ("vincular3 after", vincular3(img).total, 9)]
        for n in range(1, 8):
            rows += [(f"n={n} {k}", v, True) for k, v in mfs_checks(n).items()]
        return first_bad(rows)
    acceptance(12, "valley-hopping properties n<=7", 60, check)


def test_13_contraction(acceptance):
    def check():
        rng = random.Random(20240917)
        rows = []
        for i in range(50):
            cs = [rng.randint(-3, 3) for _ in range(18)]
            S = sequence_sfraction(cs)
            want = sfraction_integer_series(cs, 16)
            got_s = [c.eval(all_ones()) for c in sfraction_series(S, 16).coeffs]
            got_j = [c.eval(all_ones()) for c in jfraction_series(contract(S), 16).coeffs]
            rows += [(f"#{i} S", got_s, want), (f"#{i} J", got_j, want)]
        J = contract(sequence_sfraction([1] * 40))
        cat = catalan_jfraction()
        rows += [(f"b{k}", J.b(k), cat.b(k)) for k in range(17)]
        rows += [(f"lam{k}", J.lam(k), cat.lam(k)) for k in range(1, 17)]
        return first_bad(rows)
    acceptance(13, "contraction: 50 random S-fractions to order 16; c=1 is Catalan", 5, check)
