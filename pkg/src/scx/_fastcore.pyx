# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: GF(2) rank and unit-style max flow.

Semantics match ``_kernels_py`` exactly (same pivot policy, same BFS
order), so the two backends are interchangeable.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.stdint cimport int64_t, uint64_t

BACKEND = "compiled"

cdef extern from *:
    int __builtin_clzll(unsigned long long)


def gf2_rank(rows, ncols):
    """Rank over GF(2) of a matrix given as int bitmasks, one per row."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t words = (ncols + 63) // 64
    if n == 0 or ncols <= 0:
        return 0

    cdef uint64_t *mat = <uint64_t *> calloc(n * words, sizeof(uint64_t))
    cdef Py_ssize_t *pivot_of = <Py_ssize_t *> malloc(ncols * sizeof(Py_ssize_t))
    if mat == NULL or pivot_of == NULL:
        free(mat)
        free(pivot_of)
        raise MemoryError()

    cdef Py_ssize_t i, w, lead, p
    cdef uint64_t word
    cdef object tmp
    cdef int rank = 0
    try:
        for i in range(n):
            tmp = rows[i]
            w = 0
            while tmp and w < words:
                mat[i * words + w] = <uint64_t> (tmp & 0xFFFFFFFFFFFFFFFF)
                tmp >>= 64
                w += 1
        for i in range(ncols):
            pivot_of[i] = -1

        for i in range(n):
            while True:
                lead = -1
                for w in range(words - 1, -1, -1):
                    word = mat[i * words + w]
                    if word != 0:
                        lead = w * 64 + (63 - __builtin_clzll(word))
                        break
                if lead < 0:
                    break
                p = pivot_of[lead]
                if p < 0:
                    pivot_of[lead] = i
                    rank += 1
                    break
                for w in range(words):
                    mat[i * words + w] ^= mat[p * words + w]
        return rank
    finally:
        free(mat)
        free(pivot_of)


def unit_maxflow(num_nodes, tails, heads, caps, source, sink):
    """Max flow with BFS augmentation; see the pure twin for the contract."""
    cdef Py_ssize_t m = len(tails)
    cdef Py_ssize_t n = num_nodes
    cdef Py_ssize_t src = source
    cdef Py_ssize_t snk = sink

    cdef Py_ssize_t *tail = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef Py_ssize_t *head = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef int64_t *res = <int64_t *> calloc(2 * m, sizeof(int64_t))
    # CSR adjacency over the 2m directed residual arcs
    cdef Py_ssize_t *deg = <Py_ssize_t *> calloc(n + 1, sizeof(Py_ssize_t))
    cdef Py_ssize_t *adj = <Py_ssize_t *> malloc(2 * m * sizeof(Py_ssize_t))
    cdef Py_ssize_t *cursor = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *parent = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t *queue = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    if (tail == NULL or head == NULL or res == NULL or deg == NULL
            or adj == NULL or cursor == NULL or parent == NULL or queue == NULL):
        free(tail); free(head); free(res); free(deg)
        free(adj); free(cursor); free(parent); free(queue)
        raise MemoryError()

    cdef Py_ssize_t i, u, v, a, qh, qt
    cdef int64_t value = 0, bottleneck
    cdef bint have_bottleneck
    try:
        for i in range(m):
            tail[i] = tails[i]
            head[i] = heads[i]
            res[2 * i] = caps[i]
            deg[tail[i] + 1] += 1
            deg[head[i] + 1] += 1
        for i in range(n):
            deg[i + 1] += deg[i]
        for i in range(n + 1):
            cursor[i] = deg[i]
        for i in range(m):
            adj[cursor[tail[i]]] = 2 * i
            cursor[tail[i]] += 1
            adj[cursor[head[i]]] = 2 * i + 1
            cursor[head[i]] += 1

        while True:
            for i in range(n):
                parent[i] = -1
            parent[src] = -2
            queue[0] = src
            qh = 0
            qt = 1
            while qh < qt and parent[snk] == -1:
                u = queue[qh]
                qh += 1
                for i in range(deg[u], deg[u + 1]):
                    a = adj[i]
                    if res[a] > 0:
                        v = head[a >> 1] if not (a & 1) else tail[a >> 1]
                        if parent[v] == -1:
                            parent[v] = a
                            queue[qt] = v
                            qt += 1
            if parent[snk] == -1:
                break
            have_bottleneck = False
            v = snk
            while v != src:
                a = parent[v]
                if not have_bottleneck or res[a] < bottleneck:
                    bottleneck = res[a]
                    have_bottleneck = True
                v = tail[a >> 1] if not (a & 1) else head[a >> 1]
            v = snk
            while v != src:
                a = parent[v]
                res[a] -= bottleneck
                res[a ^ 1] += bottleneck
                v = tail[a >> 1] if not (a & 1) else head[a >> 1]
            value += bottleneck

        flows = [caps[i] - res[2 * i] for i in range(m)]
        return value, flows
    finally:
        free(tail); free(head); free(res); free(deg)
        free(adj); free(cursor); free(parent); free(queue)
