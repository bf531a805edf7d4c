import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_eccentricities, trivalent_graphs
from trivalent.canonical import (
    DecodeError,
    IllegalCharacterError,
    InvalidGraphError,
    UnbalancedStringError,
    ahu_modified,
    center,
    decode,
    eccentricity,
    encode,
    farthest_path,
    parse_children,
    root_at_center,
    symmetry_classes,
    tuple_names,
)
from trivalent.generator import apply_O2
from trivalent.graph import (
    WHITE,
    b12,
    b111,
    is_isomorphic_bruteforce,
    iter_isomorphisms,
    relabel,
)


def reference_encode(g):
    """Independent encoder: brute-force center, recursive naming."""
    ecc = brute_eccentricities(g)
    root = ecc.index(min(ecc))

    def name(v, parent, weight):
        kids = sorted(name(u, v, w) for u, w in g.adjacency[v] if u != parent)
        o, c = ("2", "3") if weight == 2 else ("0", "1")
        return o + "".join(kids) + c

    return name(root, None, 1)


def automorphism_orbits(g):
    """White-vertex orbits under automorphisms fixing the center, by exhaustive search."""
    c = brute_eccentricities(g)
    root = c.index(min(c))
    whites = g.whites
    orbit_of = {}
    for u in whites:
        if u in orbit_of:
            continue
        orbit_of[u] = u
        for v in whites:
            if v not in orbit_of and next(iter_isomorphisms(g, g, 64, {root: root, u: v}), None):
                orbit_of[v] = u
    blocks = {}
    for v in whites:
        blocks.setdefault(orbit_of[v], []).append(v)
    return sorted(blocks.values(), key=lambda b: b[0])


def weight1_leaf(g):
    return next(v for v in g.leaves if g.adjacency[v][0][1] == 1)


def weight2_leaf(g):
    return next(v for v in g.leaves if g.adjacency[v][0][1] == 2)


class TestFarthestPath:
    def test_from_b12_black(self):
        g = b12()
        path = farthest_path(g, 0)
        assert len(path) == 2 and path[0] == 0 and path[1] in g.leaves

    def test_from_b12_weight1_leaf(self):
        g = b12()
        path = farthest_path(g, weight1_leaf(g))
        assert path == [weight1_leaf(g), 0, weight2_leaf(g)]

    def test_from_b111_leaf(self):
        g = b111()
        path = farthest_path(g, 1)
        assert len(path) == 3 and path[0] == 1 and path[-1] in (2, 3)

    def test_unknown_vertex(self):
        with pytest.raises(KeyError):
            farthest_path(b12(), 7)

    @settings(max_examples=80, deadline=None)
    @given(trivalent_graphs(), st.data())
    def test_reaches_a_leaf_at_eccentricity(self, g, data):
        v = data.draw(st.sampled_from(list(g.vertices)))
        path = farthest_path(g, v)
        assert path[-1] in g.leaves
        assert len(path) - 1 == brute_eccentricities(g)[v]
        assert all(b in dict(g.adjacency[a]) for a, b in zip(path, path[1:]))


class TestCenter:
    def test_b12(self):
        assert brute_eccentricities(b12()) == [1, 2, 2]
        assert center(b12()) == 0

    def test_b111(self):
        assert center(b111()) == 0

    def test_eccentricity_examples(self):
        assert eccentricity(b12(), 0) == 1
        assert eccentricity(b111(), 1) == 2

    @settings(max_examples=100, deadline=None)
    @given(trivalent_graphs(), st.randoms(use_true_random=False))
    def test_matches_bruteforce_and_follows_relabelling(self, g, rnd):
        ecc = brute_eccentricities(g)
        assert [v for v in g.vertices if ecc[v] == min(ecc)] == [center(g)]
        assert [eccentricity(g, v) for v in g.vertices] == ecc
        perm = list(g.vertices)
        rnd.shuffle(perm)
        assert center(relabel(g, perm)) == perm[center(g)]

    @settings(max_examples=80, deadline=None)
    @given(trivalent_graphs())
    def test_two_sweeps_of_farthest_path(self, g):
        a = farthest_path(g, 0)[-1]
        diameter = farthest_path(g, a)
        assert len(diameter) % 2 == 1
        assert diameter[len(diameter) // 2] == center(g)

    @settings(max_examples=80, deadline=None)
    @given(trivalent_graphs())
    def test_eccentricity_parity_matches_color(self, g):
        for v in g.vertices:
            assert (eccentricity(g, v) % 2 == 0) == (g.colors[v] == WHITE)


class TestNames:
    def test_leaf_names(self):
        g = root_at_center(b12())
        assert ahu_modified(g, weight1_leaf(g)) == "01"
        assert ahu_modified(g, weight2_leaf(g)) == "23"
        assert ahu_modified(g, 0) == "001231"

    def test_unrooted_graph_is_rejected(self):
        with pytest.raises(ValueError, match="rooted"):
            ahu_modified(b12(), 0)


class TestEncode:
    def test_seeds(self):
        assert encode(b12()) == "001231"
        assert encode(b111()) == "00101011"

    def test_o2_at_weight1_leaf_of_b12(self):
        g = apply_O2(b12(), weight1_leaf(b12()))
        assert encode(g) == "0023120131"
        assert reference_encode(g) == "0023120131"

    def test_o2_at_weight2_leaf_of_b12(self):
        g = apply_O2(b12(), weight2_leaf(b12()))
        assert encode(g) == reference_encode(g) == "0201320131"

    def test_matches_reference_encoder(self, graphs_upto6):
        for g in graphs_upto6:
            assert encode(g) == reference_encode(g)

    @settings(max_examples=150, deadline=None)
    @given(trivalent_graphs(), st.randoms(use_true_random=False))
    def test_label_invariance(self, g, rnd):
        perm = list(g.vertices)
        rnd.shuffle(perm)
        s = encode(g)
        assert encode(relabel(g, perm)) == s == reference_encode(g)
        assert len(s) == 2 * len(g)
        assert set(s) <= set("0123")
        assert s[0] == "0" and s[-1] == "1"

    @settings(max_examples=100, deadline=None)
    @given(trivalent_graphs())
    def test_children_are_sorted(self, g):
        s = encode(g)
        stack = [0]
        while stack:
            i = stack.pop()
            kids, _ = parse_children(s, i)
            assert kids == sorted(kids)
            j = i + 1
            for k in kids:
                stack.append(j)
                j += len(k)

    def test_tuple_names_cover_every_vertex(self):
        g = root_at_center(apply_O2(b111(), 1))
        names = tuple_names(g)
        assert names[g.root] == encode(g)
        assert all(len(n) % 2 == 0 for n in names)


class TestDecode:
    def test_seeds(self):
        assert is_isomorphic_bruteforce(decode("001231"), b12())
        assert is_isomorphic_bruteforce(decode("00101011"), b111())

    def test_root_color_from_parity(self):
        assert decode("001231").colors[0] != WHITE
        assert decode("0023120131").colors[0] == WHITE

    @pytest.mark.parametrize(
        "text, error",
        [
            ("00x1231", IllegalCharacterError),
            ("0012 31", IllegalCharacterError),
            ("00123", UnbalancedStringError),
            ("001331", UnbalancedStringError),
            ("0101", UnbalancedStringError),
            ("3", UnbalancedStringError),
            ("0011", InvalidGraphError),
            ("00011011", InvalidGraphError),
            ("2013", DecodeError),
            ("", DecodeError),
        ],
    )
    def test_errors(self, text, error):
        with pytest.raises(error):
            decode(text)

    def test_invalid_graph_error_carries_violations(self):
        with pytest.raises(InvalidGraphError) as info:
            decode("0011")
        assert "BlackLeafViolation" in [v.kind for v in info.value.violations]

    def test_unsorted_children_decode_to_the_same_tree(self):
        assert encode(decode("0201302311")) == "0023120131"

    @settings(max_examples=100, deadline=None)
    @given(trivalent_graphs(max_ops=4))
    def test_round_trip(self, g):
        s = encode(g)
        back = decode(s)
        assert encode(back) == s
        assert is_isomorphic_bruteforce(back, g, max_vertices=64)


class TestSymmetry:
    def test_b111_has_one_class(self):
        assert symmetry_classes(b111()) == [[1, 2, 3]]

    def test_b12_has_two_singletons(self):
        assert symmetry_classes(b12()) == [[1], [2]]

    def test_matches_automorphism_orbits(self, graphs_upto6):
        for g in graphs_upto6:
            assert symmetry_classes(g) == automorphism_orbits(g)

    @settings(max_examples=60, deadline=None)
    @given(trivalent_graphs(max_ops=4))
    def test_random_graphs_match_orbits(self, g):
        assert symmetry_classes(g) == automorphism_orbits(g)

    def test_o2_at_symmetric_vertices_agrees(self, graphs_upto6):
        for g in graphs_upto6:
            for block in symmetry_classes(g):
                assert len({encode(apply_O2(g, v)) for v in block}) == 1

    def test_equal_names_are_not_enough(self, naive8):
        """Some graph has equal-named whites whose parents are not symmetric."""
        found = None
        for n in range(2, 9):
            for rec in naive8.store.records(n):
                g = root_at_center(rec.graph)
                names = tuple_names(g)
                classes = symmetry_classes(g)
                cls = {v: i for i, b in enumerate(classes) for v in b}
                for u, v in itertools.combinations(g.whites, 2):
                    if names[u] == names[v] and cls[u] != cls[v]:
                        found = (g, u, v)
                        break
                if found:
                    break
            if found:
                break
        assert found is not None
        g, u, v = found
        root = g.root
        assert next(iter_isomorphisms(g, g, 64, {root: root, u: v}), None) is None
