# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: pattern containment, permutation sweeps, vincular counts."""

DEF MAXN = 64


cdef int _load(object seq, int *out) except -1:
    cdef Py_ssize_t i, n = len(seq)
    if n > MAXN:
        raise ValueError("sequence longer than %d" % MAXN)
    for i in range(n):
        out[i] = seq[i]
    return <int>n


cdef bint _extend(const int *word, int n, const int *pat, int k,
                  int *chosen, int depth, int start) noexcept nogil:
    cdef int i, a, x, pd
    cdef bint ok
    if depth == k:
        return True
    pd = pat[depth]
    for i in range(start, n - (k - depth) + 1):
        x = word[i]
        ok = True
        for a in range(depth):
            if (word[chosen[a]] < x) != (pat[a] < pd):
                ok = False
                break
        if ok:
            chosen[depth] = i
            if _extend(word, n, pat, k, chosen, depth + 1, i + 1):
                return True
    return False


cdef inline bint _contains(const int *word, int n, const int *pat, int k) noexcept nogil:
    cdef int chosen[MAXN]
    if k == 0:
        return True
    if k > n:
        return False
    return _extend(word, n, pat, k, chosen, 0, 0)


def contains(word, pattern):
    cdef int w[MAXN]
    cdef int pt[MAXN]
    cdef int n = _load(word, w)
    cdef int k = _load(pattern, pt)
    return _contains(w, n, pt, k)


cdef bint _next_permutation(int *a, int n) noexcept nogil:
    cdef int i = n - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


cdef tuple _as_tuple(const int *a, int n):
    cdef int i
    return tuple([a[i] for i in range(n)])


def avoiders(int n, patterns):
    """All permutations of 1..n, in lexicographic order, avoiding every pattern."""
    cdef int a[MAXN]
    cdef int pats[16][MAXN]
    cdef int lens[16]
    cdef int m = len(patterns), i, j
    cdef bint bad
    if n > MAXN:
        raise ValueError("n too large")
    if m > 16:
        raise ValueError("at most 16 patterns")
    for i in range(m):
        lens[i] = _load(patterns[i], pats[i])
    for i in range(n):
        a[i] = i + 1
    out = []
    while True:
        bad = False
        for j in range(m):
            if _contains(a, n, pats[j], lens[j]):
                bad = True
                break
        if not bad:
            out.append(_as_tuple(a, n))
        if n == 0 or not _next_permutation(a, n):
            break
    return out


cdef void _vincular3(const int *word, int n, long *c) noexcept nogil:
    cdef int i, j, k, hi, lo, x, y
    c[0] = 0; c[1] = 0; c[2] = 0; c[3] = 0
    for i in range(n - 1):
        hi = word[i]
        lo = word[i + 1]
        if lo >= hi:
            continue
        for j in range(i + 2, n):
            x = word[j]
            for k in range(j + 1, n):
                y = word[k]
                if lo < x < hi < y:
                    c[0] += 1
                elif lo < y < hi < x:
                    c[1] += 1
                elif lo < x < y < hi:
                    c[2] += 1
                elif lo < y < x < hi:
                    c[3] += 1


def vincular3_counts(word):
    cdef int w[MAXN]
    cdef long c[4]
    cdef int n = _load(word, w)
    _vincular3(w, n, c)
    return (c[0], c[1], c[2], c[3])


def vincular_avoiders(int n):
    cdef int a[MAXN]
    cdef long c[4]
    cdef int i
    if n > MAXN:
        raise ValueError("n too large")
    for i in range(n):
        a[i] = i + 1
    out = []
    while True:
        _vincular3(a, n, c)
        if c[0] + c[1] + c[2] + c[3] == 0:
            out.append(_as_tuple(a, n))
        if n == 0 or not _next_permutation(a, n):
            break
    return out


def vincular2_totals(word):
    cdef int w[MAXN]
    cdef int n = _load(word, w)
    cdef int i, j, a, b, x
    cdef long s31_2 = 0, s2_31 = 0, s2_13 = 0, s13_2 = 0, hat
    for j in range(n - 1):
        a = w[j]
        b = w[j + 1]
        if a > b:
            for i in range(j + 2, n):
                x = w[i]
                if b < x < a:
                    s31_2 += 1
            for i in range(j):
                x = w[i]
                if b < x < a:
                    s2_31 += 1
        else:
            for i in range(j):
                x = w[i]
                if a < x < b:
                    s2_13 += 1
            for i in range(j + 2, n):
                x = w[i]
                if a < x < b:
                    s13_2 += 1
    hat = s2_13
    if n:
        for i in range(n - 1):
            if w[i] > w[n - 1]:
                hat += 1
    return (s31_2, s2_31, s2_13, s13_2, hat)
