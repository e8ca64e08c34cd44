# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact coloring kernel: Zykov branch and bound over bitsets.

Mirror of ``_zykov_py.solve`` with the identical deterministic search
(same bounds, same branching rule, same tie-breaks), using multi-word
C bitsets and an explicit stack arena instead of Python ints.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline int hx_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int hx_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int hx_popcount64(u64 x) nogil
    int hx_ctz64(u64 x) nogil


cdef inline int _masked_popcount(u64* row, u64* mask, int W) nogil:
    cdef int w
    cdef int total = 0
    for w in range(W):
        total += hx_popcount64(row[w] & mask[w])
    return total


cdef inline bint _test_bit(u64* bits, int v) nogil:
    return (bits[v >> 6] >> (v & 63)) & 1


cdef inline void _set_bit(u64* bits, int v) nogil:
    bits[v >> 6] |= (<u64>1) << (v & 63)


cdef inline void _clear_bit(u64* bits, int v) nogil:
    bits[v >> 6] &= ~((<u64>1) << (v & 63))


cdef int _clique_from_seed(u64* adj, u64* active, int seed, int W, u64* cand) nogil:
    cdef int w, v, d, size, best_u, best_d
    cdef u64 bits
    for w in range(W):
        cand[w] = adj[seed * W + w] & active[w]
    size = 1
    while True:
        best_u = -1
        best_d = -1
        for w in range(W):
            bits = cand[w]
            while bits:
                v = (w << 6) + hx_ctz64(bits)
                bits &= bits - 1
                d = _masked_popcount(adj + v * W, cand, W)
                if d > best_d:
                    best_d = d
                    best_u = v
        if best_u < 0:
            return size
        size += 1
        for w in range(W):
            cand[w] &= adj[best_u * W + w]
        _clear_bit(cand, best_u)


cdef int _greedy_clique(u64* adj, u64* active, int W, u64* cand) nogil:
    cdef int best = 0
    cdef int w, v, size
    cdef u64 bits
    for w in range(W):
        bits = active[w]
        while bits:
            v = (w << 6) + hx_ctz64(bits)
            bits &= bits - 1
            size = _clique_from_seed(adj, active, v, W, cand)
            if size > best:
                best = size
    return best


cdef int _dsatur(u64* adj, u64* active, int n, int W,
                 unsigned char* used, int* sat, int* deg,
                 unsigned char* done, int* labels) nogil:
    cdef int v, w, c, word, best_v, best_sat, best_deg
    cdef int num_colors = 0
    cdef int remaining = 0
    cdef u64 bits
    memset(used, 0, <size_t>n * <size_t>n)
    for v in range(n):
        sat[v] = 0
        labels[v] = -1
        if _test_bit(active, v):
            done[v] = 0
            deg[v] = _masked_popcount(adj + v * W, active, W)
            remaining += 1
        else:
            done[v] = 1
    while remaining > 0:
        best_v = -1
        best_sat = -1
        best_deg = -1
        for v in range(n):
            if done[v]:
                continue
            if sat[v] > best_sat or (sat[v] == best_sat and deg[v] > best_deg):
                best_sat = sat[v]
                best_deg = deg[v]
                best_v = v
        done[best_v] = 1
        remaining -= 1
        c = 0
        while used[best_v * n + c]:
            c += 1
        labels[best_v] = c
        if c + 1 > num_colors:
            num_colors = c + 1
        for word in range(W):
            bits = adj[best_v * W + word] & active[word]
            while bits:
                v = (word << 6) + hx_ctz64(bits)
                bits &= bits - 1
                if not used[v * n + c]:
                    used[v * n + c] = 1
                    sat[v] += 1
    return num_colors


cdef bint _branch_pair(u64* adj, u64* active, int n, int W, int* out_u, int* out_v) nogil:
    cdef int u, v, w, score
    cdef int best_score = -1
    for u in range(n):
        if not _test_bit(active, u):
            continue
        for v in range(u + 1, n):
            if not _test_bit(active, v):
                continue
            if _test_bit(adj + u * W, v):
                continue
            score = 0
            for w in range(W):
                score += hx_popcount64(adj[u * W + w] & adj[v * W + w] & active[w])
            if score > best_score:
                best_score = score
                out_u[0] = u
                out_v[0] = v
    return best_score >= 0


def solve(int n, edges):
    """Optimal proper coloring of an n-vertex graph given (a, b) edge pairs.

    Returns one color label per vertex; same output as the pure-Python
    kernel for any input.
    """
    if n == 0:
        return []
    cdef int W = (n + 63) >> 6
    cdef int frame_adj = n * W
    cdef int frame_words = frame_adj + W
    cdef int cap = 256
    cdef int top, best_k, lb, ub, u_pick, v_pick
    cdef int a, b, v, w
    cdef u64 rv, bits
    cdef u64* arena = NULL
    cdef int* rep_arena = NULL
    cdef u64* adj = NULL
    cdef u64* active = NULL
    cdef u64* cand = NULL
    cdef u64* dst = NULL
    cdef u64* new_arena = NULL
    cdef int* new_rep = NULL
    cdef int* rep = NULL
    cdef int* sat = NULL
    cdef int* deg = NULL
    cdef int* labels = NULL
    cdef int* best_labels = NULL
    cdef unsigned char* used = NULL
    cdef unsigned char* done = NULL

    arena = <u64*> malloc(<size_t>cap * frame_words * sizeof(u64))
    rep_arena = <int*> malloc(<size_t>cap * n * sizeof(int))
    adj = <u64*> malloc(<size_t>frame_adj * sizeof(u64))
    active = <u64*> malloc(<size_t>W * sizeof(u64))
    cand = <u64*> malloc(<size_t>W * sizeof(u64))
    rep = <int*> malloc(<size_t>n * sizeof(int))
    sat = <int*> malloc(<size_t>n * sizeof(int))
    deg = <int*> malloc(<size_t>n * sizeof(int))
    labels = <int*> malloc(<size_t>n * sizeof(int))
    best_labels = <int*> malloc(<size_t>n * sizeof(int))
    used = <unsigned char*> malloc(<size_t>n * <size_t>n)
    done = <unsigned char*> malloc(<size_t>n)
    try:
        if (arena == NULL or rep_arena == NULL or adj == NULL or active == NULL
                or cand == NULL or rep == NULL or sat == NULL or deg == NULL
                or labels == NULL or best_labels == NULL or used == NULL or done == NULL):
            raise MemoryError()

        memset(arena, 0, <size_t>frame_words * sizeof(u64))
        for e in edges:
            a = e[0]
            b = e[1]
            _set_bit(arena + a * W, b)
            _set_bit(arena + b * W, a)
        for v in range(n):
            _set_bit(arena + frame_adj, v)
            rep_arena[v] = v
            best_labels[v] = v

        top = 1
        best_k = n + 1
        while top > 0:
            top -= 1
            memcpy(adj, arena + <size_t>top * frame_words, <size_t>frame_adj * sizeof(u64))
            memcpy(active, arena + <size_t>top * frame_words + frame_adj, <size_t>W * sizeof(u64))
            memcpy(rep, rep_arena + <size_t>top * n, <size_t>n * sizeof(int))

            lb = _greedy_clique(adj, active, W, cand)
            if lb >= best_k:
                continue
            ub = _dsatur(adj, active, n, W, used, sat, deg, done, labels)
            if ub < best_k:
                best_k = ub
                for v in range(n):
                    best_labels[v] = labels[rep[v]]
                if lb >= best_k:
                    continue
            if not _branch_pair(adj, active, n, W, &u_pick, &v_pick):
                continue

            if top + 2 > cap:
                cap *= 2
                new_arena = <u64*> realloc(arena, <size_t>cap * frame_words * sizeof(u64))
                new_rep = <int*> realloc(rep_arena, <size_t>cap * n * sizeof(int))
                if new_arena == NULL or new_rep == NULL:
                    if new_arena != NULL:
                        arena = new_arena
                    if new_rep != NULL:
                        rep_arena = new_rep
                    raise MemoryError()
                arena = new_arena
                rep_arena = new_rep

            # Different-color branch: add the edge u-v (explored second).
            dst = arena + <size_t>top * frame_words
            memcpy(dst, adj, <size_t>frame_adj * sizeof(u64))
            memcpy(dst + frame_adj, active, <size_t>W * sizeof(u64))
            _set_bit(dst + u_pick * W, v_pick)
            _set_bit(dst + v_pick * W, u_pick)
            memcpy(rep_arena + <size_t>top * n, rep, <size_t>n * sizeof(int))
            top += 1

            # Same-color branch: contract v into u (explored first).
            dst = arena + <size_t>top * frame_words
            memcpy(dst, adj, <size_t>frame_adj * sizeof(u64))
            for w in range(W):
                rv = adj[v_pick * W + w] & active[w]
                dst[u_pick * W + w] |= rv
                bits = rv
                while bits:
                    v = (w << 6) + hx_ctz64(bits)
                    bits &= bits - 1
                    _set_bit(dst + v * W, u_pick)
            memcpy(dst + frame_adj, active, <size_t>W * sizeof(u64))
            _clear_bit(dst + frame_adj, v_pick)
            for v in range(n):
                rep_arena[<size_t>top * n + v] = u_pick if rep[v] == v_pick else rep[v]
            top += 1

        return [best_labels[v] for v in range(n)]
    finally:
        free(arena)
        free(rep_arena)
        free(adj)
        free(active)
        free(cand)
        free(rep)
        free(sat)
        free(deg)
        free(labels)
        free(best_labels)
        free(used)
        free(done)
