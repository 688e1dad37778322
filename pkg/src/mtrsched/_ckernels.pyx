# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels.

Twin of mtrsched._kernels_py: same inputs, same outputs, bit for bit
(tests/test_kernels.py asserts parity).  Limited to 64 vertices; the
dispatcher falls back to the pure twin beyond that.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int mtr_popcount64(unsigned long long x)
        { return __builtin_popcountll(x); }
    static inline int mtr_ctz64(unsigned long long x)
        { return __builtin_ctzll(x); }
    #else
    static inline int mtr_popcount64(unsigned long long x)
        { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    static inline int mtr_ctz64(unsigned long long x)
        { int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c; }
    #endif
    """
    int mtr_popcount64(uint64_t x) nogil
    int mtr_ctz64(uint64_t x) nogil

HWF = 0
MDF = 1
HWF_TIE_MDF = 2


cdef void _expand(uint64_t r, uint64_t p, uint64_t x,
                  uint64_t* non, list out):
    cdef uint64_t m, b, cand, nv
    cdef int best, cov, best_cov, v
    if p == 0 and x == 0:
        out.append(r)
        return
    m = p | x
    best_cov = -1
    best = 0
    while m:
        b = m & (~m + 1)
        m ^= b
        v = mtr_ctz64(b)
        cov = mtr_popcount64(p & non[v])
        if cov > best_cov:
            best_cov = cov
            best = v
    cand = p & ~non[best]
    while cand:
        b = cand & (~cand + 1)
        cand ^= b
        v = mtr_ctz64(b)
        nv = non[v]
        _expand(r | b, p & nv, x & nv, non, out)
        p ^= b
        x |= b


def maximal_independent_sets(adj):
    """All maximal independent sets of the graph with adjacency bitmasks
    ``adj``, as bitmasks in no particular order (<= 64 vertices)."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    if n == 0:
        return [0]
    cdef uint64_t non[64]
    cdef uint64_t full
    cdef uint64_t one = 1
    cdef int v
    full = (<uint64_t>0xFFFFFFFFFFFFFFFF) >> (64 - n)
    for v in range(n):
        non[v] = (~<uint64_t>adj[v]) & full & ~(one << v)
    out = []
    _expand(0, full, 0, non, out)
    return out


cdef inline bint _before(int mode, int a, int b, int64_t* residual,
                         int* deg) nogil:
    # strict key order per mode; equal keys return False so the insertion
    # sort below stays stable
    if mode == 0:  # HWF: residual descending
        return residual[a] > residual[b]
    if mode == 1:  # MDF: degree descending
        return deg[a] > deg[b]
    # hybrid: residual descending, then degree descending
    if residual[a] != residual[b]:
        return residual[a] > residual[b]
    return deg[a] > deg[b]


def greedy_rounds(demands, adj, int mode):
    """Greedy maximal-matching rounds; see the pure twin for semantics."""
    cdef int n = len(demands)
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    if n == 0:
        return []
    cdef int64_t residual[64]
    cdef uint64_t masks[64]
    cdef int active[64]
    cdef int members[64]
    cdef int deg[64]
    cdef int n_active = 0, n_members, i, j, v, key
    cdef uint64_t amask, sel, one = 1
    cdef int64_t slots
    for i in range(n):
        residual[i] = demands[i]
        masks[i] = adj[i]
        deg[i] = 0
        if residual[i] > 0:
            active[n_active] = i
            n_active += 1
    rounds = []
    while n_active > 0:
        if mode != 0:
            amask = 0
            for i in range(n_active):
                amask |= one << active[i]
            for i in range(n_active):
                v = active[i]
                deg[v] = mtr_popcount64(masks[v] & amask)
        # stable insertion sort of the persistent active list
        for i in range(1, n_active):
            v = active[i]
            j = i - 1
            while j >= 0 and _before(mode, v, active[j], residual, deg):
                active[j + 1] = active[j]
                j -= 1
            active[j + 1] = v
        sel = 0
        n_members = 0
        for i in range(n_active):
            v = active[i]
            if masks[v] & sel == 0:
                sel |= one << v
                members[n_members] = v
                n_members += 1
        slots = residual[members[0]]
        for i in range(1, n_members):
            if residual[members[i]] < slots:
                slots = residual[members[i]]
        rounds.append((int(sel), int(slots)))
        for i in range(n_members):
            residual[members[i]] -= slots
        j = 0
        for i in range(n_active):
            if residual[active[i]] > 0:
                active[j] = active[i]
                j += 1
        n_active = j
    return rounds
