# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels. Same contract as ``trivalent._purepy``."""

from libc.stdlib cimport malloc, free


cdef struct _Csr:
    int n
    int *start
    int *nbr
    char *wt


cdef int _load(object adj, _Csr *g) except -1:
    cdef Py_ssize_t n = len(adj), m = 0, v, k
    cdef object row, pair
    for row in adj:
        m += len(row)
    g.n = <int>n
    g.start = <int *>malloc((n + 1) * sizeof(int))
    g.nbr = <int *>malloc((m + 1) * sizeof(int))
    g.wt = <char *>malloc((m + 1) * sizeof(char))
    if g.start == NULL or g.nbr == NULL or g.wt == NULL:
        _release(g)
        raise MemoryError()
    k = 0
    for v in range(n):
        g.start[v] = <int>k
        for pair in adj[v]:
            g.nbr[k] = <int>pair[0]
            g.wt[k] = <char>(<int>pair[1])
            k += 1
    g.start[n] = <int>k
    return 0


cdef void _release(_Csr *g):
    free(g.start)
    free(g.nbr)
    free(g.wt)
    g.start = NULL
    g.nbr = NULL
    g.wt = NULL


cdef int _bfs(_Csr *g, int source, int *parent, int *order) nogil:
    """Fill parent/order; return the last vertex dequeued."""
    cdef int head = 0, tail = 1, v, u, k
    for v in range(g.n):
        parent[v] = -1
    parent[source] = source
    order[0] = source
    while head < tail:
        v = order[head]
        head += 1
        for k in range(g.start[v], g.start[v + 1]):
            u = g.nbr[k]
            if parent[u] < 0:
                parent[u] = v
                order[tail] = u
                tail += 1
    return order[tail - 1]


cdef int _center(_Csr *g, int *parent, int *order) except -1:
    cdef int a, b, length = 1, v, half
    if g.n == 1:
        return 0
    a = _bfs(g, 0, parent, order)
    b = _bfs(g, a, parent, order)
    v = b
    while v != a:
        v = parent[v]
        length += 1
    if length % 2 == 0:
        raise ValueError("diameter has odd length; graph is not a trivalent tree")
    half = length // 2
    v = b
    while half > 0:
        v = parent[v]
        half -= 1
    return v


def bfs_farthest(adj, int source):
    cdef _Csr g
    cdef int *parent
    cdef int *order
    cdef int far
    _load(adj, &g)
    parent = <int *>malloc(g.n * sizeof(int))
    order = <int *>malloc(g.n * sizeof(int))
    try:
        far = _bfs(&g, source, parent, order)
        return far, [parent[v] for v in range(g.n)]
    finally:
        free(parent)
        free(order)
        _release(&g)


def center(adj):
    cdef _Csr g
    cdef int *parent
    cdef int *order
    _load(adj, &g)
    parent = <int *>malloc(g.n * sizeof(int))
    order = <int *>malloc(g.n * sizeof(int))
    try:
        return _center(&g, parent, order)
    finally:
        free(parent)
        free(order)
        _release(&g)


cdef list _names(_Csr *g, int root, int *parent, int *order):
    cdef int n = g.n, i, v, p, k
    cdef list kids = [None] * n
    cdef list names = [None] * n
    cdef list ks
    cdef bint heavy
    _bfs(g, root, parent, order)
    for i in range(n - 1, -1, -1):
        v = order[i]
        heavy = False
        if v != root:
            p = parent[v]
            for k in range(g.start[v], g.start[v + 1]):
                if g.nbr[k] == p:
                    heavy = g.wt[k] == 2
                    break
        ks = <list>kids[v]
        if ks is None:
            name = "23" if heavy else "01"
        else:
            ks.sort()
            name = ("2" if heavy else "0") + "".join(ks) + ("3" if heavy else "1")
        names[v] = name
        if v != root:
            p = parent[v]
            if kids[p] is None:
                kids[p] = [name]
            else:
                (<list>kids[p]).append(name)
    return names


def tuple_names(adj, int root):
    cdef _Csr g
    cdef int *parent
    cdef int *order
    _load(adj, &g)
    parent = <int *>malloc(g.n * sizeof(int))
    order = <int *>malloc(g.n * sizeof(int))
    try:
        names = _names(&g, root, parent, order)
        return names, [parent[v] for v in range(g.n)]
    finally:
        free(parent)
        free(order)
        _release(&g)


def encode(adj):
    cdef _Csr g
    cdef int *parent
    cdef int *order
    cdef int c
    _load(adj, &g)
    parent = <int *>malloc(g.n * sizeof(int))
    order = <int *>malloc(g.n * sizeof(int))
    try:
        c = _center(&g, parent, order)
        return _names(&g, c, parent, order)[c]
    finally:
        free(parent)
        free(order)
        _release(&g)


def parse_tree(str s):
    cdef bytes raw = s.encode("ascii")
    cdef const char *c = raw
    cdef Py_ssize_t length = len(raw), i
    cdef int n = <int>(length // 2), v = 0, top = 0, p, w
    cdef int *stack = <int *>malloc((n + 1) * sizeof(int))
    cdef list rows = [], levels = []
    if stack == NULL:
        raise MemoryError()
    try:
        for i in range(length):
            if c[i] == b"0" or c[i] == b"2":
                row = []
                if top > 0:
                    p = stack[top - 1]
                    w = 2 if c[i] == b"2" else 1
                    row.append((p, w))
                    (<list>rows[p]).append((v, w))
                rows.append(row)
                levels.append(top)
                stack[top] = v
                top += 1
                v += 1
            else:
                top -= 1
        return tuple([tuple(r) for r in rows]), levels
    finally:
        free(stack)
