import itertools

import pytest
from hypothesis import strategies as st

from trivalent.generator import Mode, apply_O1, apply_O1star, apply_O2, enumerate_graphs
from trivalent.graph import b12, b111, relabel


@pytest.fixture(scope="session")
def naive8():
    return enumerate_graphs(8, Mode.NAIVE)


@pytest.fixture(scope="session")
def symmetry8():
    return enumerate_graphs(8, Mode.SYMMETRY)


@pytest.fixture(scope="session")
def graphs_upto6(naive8):
    store = naive8.store
    return [rec.graph for n in range(2, 7) for rec in store.records(n)]


@pytest.fixture(scope="session")
def graphs_upto8(naive8):
    store = naive8.store
    return [rec.graph for n in store.white_counts() for rec in store.records(n)]


def all_pairs_distances(g):
    """Floyd-Warshall; deliberately unrelated to the BFS code under test."""
    n = len(g)
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v, _ in g.edges():
        d[u][v] = d[v][u] = 1
    for k, i, j in itertools.product(range(n), repeat=3):
        if d[i][k] + d[k][j] < d[i][j]:
            d[i][j] = d[i][k] + d[k][j]
    return d


def brute_eccentricities(g):
    return [max(row) for row in all_pairs_distances(g)]


def permutation_isomorphic(g, h):
    """Plain search over all n! bijections, no pruning. Tiny graphs only."""
    if len(g) != len(h):
        return False
    eg = {(u, v): w for u, v, w in g.edges()}
    eg.update({(v, u): w for (u, v), w in list(eg.items())})
    eh = {(u, v): w for u, v, w in h.edges()}
    eh.update({(v, u): w for (u, v), w in list(eh.items())})
    for perm in itertools.permutations(range(len(g))):
        if any(g.colors[v] != h.colors[perm[v]] for v in range(len(g))):
            continue
        if all(eh.get((perm[u], perm[v])) == w for (u, v), w in eg.items()):
            return True
    return False


@st.composite
def trivalent_graphs(draw, max_ops=6):
    """A valid graph built by a random sequence of operations, randomly relabelled."""
    g = draw(st.sampled_from([b12, b111]))()
    for _ in range(draw(st.integers(0, max_ops))):
        op = draw(st.sampled_from(["O1", "O2", "O1*"]))
        w = draw(st.sampled_from(g.whites))
        if op == "O1":
            g = apply_O1(g, w)
        elif op == "O2":
            g = apply_O2(g, w)
        else:
            other = draw(st.sampled_from([b12, b111]))()
            g = apply_O1star(g, w, other, draw(st.sampled_from(other.whites)))
    perm = draw(st.permutations(list(range(len(g)))))
    return relabel(g, perm)
