from itertools import permutations

import pytest

from catalan_cf import _purekernels as pure
from catalan_cf import kernels
from oracles import V2, V3, hat_2_13, naive_avoiders, naive_contains, vincular_count

PATTERNS = [(1,), (2, 1), (3, 1, 2), (3, 2, 1), (2, 3, 1), (3, 1, 4, 2), (4, 1, 3, 2), (2, 4, 1, 3)]
backends = [pure] + ([kernels.compiled] if kernels.compiled is not None else [])


@pytest.fixture(params=backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def impl(request):
    return request.param


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("n", range(1, 7))
def test_contains_matches_subsequence_scan(impl, n):
    for s in permutations(range(1, n + 1)):
        for pat in PATTERNS:
            if len(pat) <= n:
                assert impl.contains(s, pat) == naive_contains(s, pat), (s, pat)


def test_avoiders_matches_oracle(impl):
    for n in range(0, 7):
        for pats in ([(3, 2, 1)], [(3, 1, 2)], [(3, 1, 2, 4), (4, 1, 2, 3), (3, 1, 4, 2), (4, 1, 3, 2)]):
            assert list(impl.avoiders(n, pats)) == naive_avoiders(n, pats)


def test_vincular_counts_match_oracle(impl):
    for n in range(0, 7):
        for s in permutations(range(1, n + 1)):
            want3 = tuple(vincular_count(s, V3[k]) for k in ("31-2-4", "31-4-2", "41-2-3", "41-3-2"))
            assert tuple(impl.vincular3_counts(s)) == want3
            want2 = tuple(vincular_count(s, V2[k]) for k in ("31-2", "2-31", "2-13", "13-2"))
            assert tuple(impl.vincular2_totals(s)) == (*want2, hat_2_13(s))


def test_vincular_avoiders(impl):
    for n in range(0, 7):
        want = [s for s in permutations(range(1, n + 1))
                if not any(vincular_count(s, b) for b in V3.values())]
        assert list(impl.vincular_avoiders(n)) == want


@pytest.mark.skipif(kernels.compiled is None, reason="extension not built")
def test_compiled_equals_pure_n8():
    c = kernels.compiled
    b4 = [(3, 1, 2, 4), (4, 1, 2, 3), (3, 1, 4, 2), (4, 1, 3, 2)]
    assert list(c.avoiders(8, b4)) == list(pure.avoiders(8, b4))
    assert list(c.vincular_avoiders(8)) == list(pure.vincular_avoiders(8))
    for s in list(permutations(range(1, 9)))[::37]:
        assert tuple(c.vincular2_totals(s)) == tuple(pure.vincular2_totals(s))
        assert tuple(c.vincular3_counts(s)) == tuple(pure.vincular3_counts(s))
