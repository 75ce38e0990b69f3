"""Pure-Python bitmask kernels.

Digraphs are given as a list ``out`` of out-neighborhood bitmasks indexed
by vertex position.  Assignment searches take a list of undirected edges
``(i, j)`` and try the three states per edge: 0 = i->j, 1 = j->i,
2 = both arcs.
"""

FORWARD, BACKWARD, BOTH = 0, 1, 2


def _union(out, mask):
    acc = 0
    while mask:
        low = mask & -mask
        acc |= out[low.bit_length() - 1]
        mask ^= low
    return acc


def _violates(present, absent, nonadj):
    # present[u]: arcs known to exist; absent[u]: arcs known to be missing.
    # On a complete assignment absent = ~present, so this is the full axiom test.
    n = len(present)
    two = [_union(present, present[u]) for u in range(n)]
    for u in range(n):
        pu = present[u]
        if _union(present, two[u]) & absent[u]:
            return True
        if two[u] and nonadj[u]:
            m = nonadj[u]
            while m:
                low = m & -m
                if two[u] & present[low.bit_length() - 1]:
                    return True
                m ^= low
        au = absent[u]
        for v in range(u + 1, n):
            pv = present[v]
            if pu & pv and pu & absent[v] and pv & au:
                return True
    return False


def axioms_hold(out):
    """True iff the digraph satisfies the three neighborhood axioms."""
    n = len(out)
    full = (1 << n) - 1
    adj = [out[u] for u in range(n)]
    for u in range(n):
        m = out[u]
        while m:
            low = m & -m
            adj[low.bit_length() - 1] |= 1 << u
            m ^= low
    absent = [full & ~out[u] for u in range(n)]
    nonadj = [full & ~adj[u] & ~(1 << u) for u in range(n)]
    return not _violates(list(out), absent, nonadj)


def search_assignments(n, edges, first_only=False, collect=True):
    """Count (and optionally collect) arc assignments that satisfy the axioms.

    Returns ``(count, states)`` where ``states`` lists the passing
    assignments as tuples aligned with ``edges``.  Subtrees are pruned as
    soon as the decided arcs already witness a violation; violations are
    monotone in the decided arcs, so the count is exact.
    """
    full = (1 << n) - 1
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    nonadj = [full & ~adj[u] & ~(1 << u) for u in range(n)]
    present = [0] * n
    absent = [nonadj[u] | (1 << u) for u in range(n)]
    states = [0] * len(edges)
    found = []
    count = 0
    m = len(edges)

    def rec(k):
        nonlocal count
        if k == m:
            count += 1
            if collect:
                found.append(tuple(states))
            return first_only
        i, j = edges[k]
        bi, bj = 1 << i, 1 << j
        for s in (FORWARD, BACKWARD, BOTH):
            if s == FORWARD:
                present[i] |= bj
                absent[j] |= bi
            elif s == BACKWARD:
                present[j] |= bi
                absent[i] |= bj
            else:
                present[i] |= bj
                present[j] |= bi
            states[k] = s
            stop = False
            if not _violates(present, absent, nonadj):
                stop = rec(k + 1)
            present[i] &= ~bj
            present[j] &= ~bi
            absent[i] &= ~bj
            absent[j] &= ~bi
            if stop:
                return True
        return False

    rec(0)
    return count, found
