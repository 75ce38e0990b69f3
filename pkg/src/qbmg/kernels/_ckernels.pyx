# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``; same API, vertex count limited to 64."""

from libc.stdint cimport uint64_t

DEF MAXN = 64
DEF MAXE = 2016


cdef inline int _lowbit(uint64_t m) nogil:
    return __builtin_ctzll(m)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline uint64_t _union(uint64_t* out, uint64_t mask) nogil:
    cdef uint64_t acc = 0
    while mask:
        acc |= out[_lowbit(mask)]
        mask &= mask - 1
    return acc


cdef bint _violates(int n, uint64_t* present, uint64_t* absent, uint64_t* nonadj) nogil:
    cdef uint64_t two[MAXN]
    cdef int u, v
    cdef uint64_t m, pu, pv, au
    for u in range(n):
        two[u] = _union(present, present[u])
    for u in range(n):
        if _union(present, two[u]) & absent[u]:
            return True
        if two[u]:
            m = nonadj[u]
            while m:
                if two[u] & present[_lowbit(m)]:
                    return True
                m &= m - 1
        pu = present[u]
        au = absent[u]
        for v in range(u + 1, n):
            pv = present[v]
            if (pu & pv) and (pu & absent[v]) and (pv & au):
                return True
    return False


def _check_n(int n):
    if n > MAXN:
        raise ValueError(f"compiled kernels support at most {MAXN} vertices, got {n}")


def axioms_hold(out):
    """True iff the digraph satisfies the three neighborhood axioms."""
    cdef int n = len(out)
    _check_n(n)
    cdef uint64_t present[MAXN]
    cdef uint64_t absent[MAXN]
    cdef uint64_t nonadj[MAXN]
    cdef uint64_t adj[MAXN]
    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef int u
    cdef uint64_t m
    for u in range(n):
        present[u] = out[u]
        adj[u] = present[u]
    for u in range(n):
        m = present[u]
        while m:
            adj[_lowbit(m)] |= (<uint64_t>1 << u)
            m &= m - 1
    for u in range(n):
        absent[u] = full & ~present[u]
        nonadj[u] = full & ~adj[u] & ~(<uint64_t>1 << u)
    return not _violates(n, present, absent, nonadj)


cdef struct Search:
    int n
    int m
    int first_only
    int stop
    long long count
    uint64_t present[MAXN]
    uint64_t absent[MAXN]
    uint64_t nonadj[MAXN]
    int ei[MAXE]
    int ej[MAXE]
    unsigned char states[MAXE]


cdef void _rec(Search* s, int k, list found, bint collect):
    cdef int i, j, st
    cdef uint64_t bi, bj
    if k == s.m:
        s.count += 1
        if collect:
            found.append(tuple([s.states[t] for t in range(s.m)]))
        if s.first_only:
            s.stop = 1
        return
    i = s.ei[k]
    j = s.ej[k]
    bi = <uint64_t>1 << i
    bj = <uint64_t>1 << j
    for st in range(3):
        if st == 0:
            s.present[i] |= bj
            s.absent[j] |= bi
        elif st == 1:
            s.present[j] |= bi
            s.absent[i] |= bj
        else:
            s.present[i] |= bj
            s.present[j] |= bi
        s.states[k] = st
        if not _violates(s.n, s.present, s.absent, s.nonadj):
            _rec(s, k + 1, found, collect)
        s.present[i] &= ~bj
        s.present[j] &= ~bi
        s.absent[i] &= ~bj
        s.absent[j] &= ~bi
        if s.stop:
            return


def search_assignments(int n, edges, first_only=False, collect=True):
    """Count (and optionally collect) arc assignments that satisfy the axioms."""
    _check_n(n)
    cdef int m = len(edges)
    if m > MAXE:
        raise ValueError("too many edges")
    cdef Search s
    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef uint64_t adj[MAXN]
    cdef int u, k
    s.n = n
    s.m = m
    s.first_only = 1 if first_only else 0
    s.stop = 0
    s.count = 0
    for u in range(n):
        adj[u] = 0
        s.present[u] = 0
    for k in range(m):
        s.ei[k] = edges[k][0]
        s.ej[k] = edges[k][1]
        adj[s.ei[k]] |= <uint64_t>1 << s.ej[k]
        adj[s.ej[k]] |= <uint64_t>1 << s.ei[k]
    for u in range(n):
        s.nonadj[u] = full & ~adj[u] & ~(<uint64_t>1 << u)
        s.absent[u] = s.nonadj[u] | (<uint64_t>1 << u)
    found = []
    _rec(&s, 0, found, collect)
    return int(s.count), found
