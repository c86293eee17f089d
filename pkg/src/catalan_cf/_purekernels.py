"""Pure-Python versions of the hot loops; semantics match ``_ckernels.pyx``."""
from __future__ import annotations

from itertools import permutations


def contains(word, pattern) -> bool:
    k = len(pattern)
    n = len(word)
    if k == 0:
        return True
    if k > n:
        return False
    chosen = [0] * k

    def extend(depth: int, start: int) -> bool:
        if depth == k:
            return True
        pd = pattern[depth]
        for i in range(start, n - (k - depth) + 1):
            x = word[i]
            ok = True
            for a in range(depth):
                if (word[chosen[a]] < x) != (pattern[a] < pd):
                    ok = False
                    break
            if ok:
                chosen[depth] = i
                if extend(depth + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def avoiders(n: int, patterns) -> list[tuple[int, ...]]:
    patterns = [tuple(pat) for pat in patterns]
    return [s for s in permutations(range(1, n + 1))
            if not any(contains(s, pat) for pat in patterns)]


def vincular3_counts(word) -> tuple[int, int, int, int]:
    """Occurrences of 31-2-4, 31-4-2, 41-2-3, 41-3-2 (0-based scan)."""
    n = len(word)
    c3124 = c3142 = c4123 = c4132 = 0
    for i in range(n - 1):
        hi, lo = word[i], word[i + 1]
        if lo >= hi:
            continue
        for j in range(i + 2, n):
            a = word[j]
            for k in range(j + 1, n):
                b = word[k]
                if lo < a < hi < b:
                    c3124 += 1
                elif lo < b < hi < a:
                    c3142 += 1
                elif lo < a < b < hi:
                    c4123 += 1
                elif lo < b < a < hi:
                    c4132 += 1
    return c3124, c3142, c4123, c4132


def vincular_avoiders(n: int) -> list[tuple[int, ...]]:
    return [s for s in permutations(range(1, n + 1)) if sum(vincular3_counts(s)) == 0]


def vincular2_totals(word) -> tuple[int, int, int, int, int]:
    """Totals of (31-2), (2-31), (2-13), (13-2) and the hatted (2-13).

    Index ranges are the literal ones: for 1-based position ``i`` the adjacent
    pair ``(j-1, j)`` has ``1 < j < i`` and the pair ``(j, j+1)`` has
    ``i < j < n``; the hatted variant lets ``j`` reach ``n`` with
    ``word[n+1] = n+1``.
    """
    n = len(word)
    s31_2 = s2_31 = s2_13 = s13_2 = hat = 0
    for j in range(n - 1):  # adjacent pair (j, j+1), 0-based
        a, b = word[j], word[j + 1]
        if a > b:
            for i in range(j + 2, n):
                if b < word[i] < a:
                    s31_2 += 1
            for i in range(j):
                if b < word[i] < a:
                    s2_31 += 1
        else:
            for i in range(j):
                if a < word[i] < b:
                    s2_13 += 1
            for i in range(j + 2, n):
                if a < word[i] < b:
                    s13_2 += 1
    hat = s2_13
    if n:
        last = word[n - 1]
        for i in range(n - 1):
            if word[i] > last:
                hat += 1
    return s31_2, s2_31, s2_13, s13_2, hat
