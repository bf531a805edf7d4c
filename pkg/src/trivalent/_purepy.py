"""Pure-Python hot kernels: center finding and the weighted AHU encoding.

Adjacency arguments are sequences indexed by vertex, each a sequence of
``(neighbor, weight)`` pairs. The compiled module ``_speedups`` exposes the
same functions with the same results.
"""


def bfs_farthest(adj, source):
    """Return ``(farthest vertex, parent list)`` of a BFS from ``source``.

    Ties go to the vertex discovered first.
    """
    n = len(adj)
    parent = [-1] * n
    parent[source] = source
    queue = [source]
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        for u, _ in adj[v]:
            if parent[u] < 0:
                parent[u] = v
                queue.append(u)
    return queue[-1], parent


def center(adj):
    """Midpoint of a diameter found by two farthest-vertex sweeps."""
    if len(adj) == 1:
        return 0
    a, _ = bfs_farthest(adj, 0)
    b, parent = bfs_farthest(adj, a)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    if len(path) % 2 == 0:
        raise ValueError("diameter has odd length; graph is not a trivalent tree")
    return path[len(path) // 2]


def tuple_names(adj, root):
    """Weighted AHU names of every vertex of the tree rooted at ``root``.

    A vertex reached by a weight-2 edge is wrapped in ``2..3``; the root and
    vertices reached by weight 1 are wrapped in ``0..1``. Children names are
    sorted as plain strings before concatenation.
    """
    n = len(adj)
    parent = [-1] * n
    heavy = [False] * n
    parent[root] = root
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u, w in adj[v]:
            if parent[u] < 0:
                parent[u] = v
                heavy[u] = w == 2
                order.append(u)
    kids = [[] for _ in range(n)]
    names = [""] * n
    for v in reversed(order):
        ks = kids[v]
        ks.sort()
        name = ("2" if heavy[v] else "0") + "".join(ks) + ("3" if heavy[v] else "1")
        names[v] = name
        if v != root:
            kids[parent[v]].append(name)
    return names, parent


def encode(adj):
    """Canonical string of an unrooted tree: the root name at its center."""
    c = center(adj)
    names, _ = tuple_names(adj, c)
    return names[c]


def parse_tree(s):
    """Build the tree spelled by a balanced canonical string.

    Vertices are numbered in preorder (root 0). Returns ``(adjacency,
    levels)``; each row lists the parent first, then children in order.
    Assumes ``s`` is already known to be balanced.
    """
    rows = []
    levels = []
    stack = []
    for ch in s:
        if ch == "0" or ch == "2":
            v = len(rows)
            row = []
            if stack:
                p = stack[-1]
                w = 2 if ch == "2" else 1
                row.append((p, w))
                rows[p].append((v, w))
            rows.append(row)
            levels.append(len(stack))
            stack.append(v)
        else:
            stack.pop()
    return tuple(tuple(r) for r in rows), levels
