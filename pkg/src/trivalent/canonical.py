"""Center finding, canonical strings and white-vertex symmetry classes.

The canonical string of a trivalent graph is the weighted AHU name of its
center. Each vertex is named by wrapping the sorted concatenation of its
children's names in ``0..1`` (reached by a weight-1 edge, or the root) or
``2..3`` (reached by a weight-2 edge). Two graphs are isomorphic exactly when
their strings agree, so the string doubles as a dedup hash key.
"""

from __future__ import annotations

from . import _kernels
from .graph import BLACK, WHITE, TrivalentGraph, validate

__all__ = [
    "farthest_path",
    "eccentricity",
    "center",
    "root_at_center",
    "ahu_modified",
    "tuple_names",
    "encode",
    "decode",
    "decode_trusted",
    "parse_children",
    "symmetry_classes",
    "class_representatives",
    "DecodeError",
    "IllegalCharacterError",
    "UnbalancedStringError",
    "InvalidGraphError",
]

_OPEN = {"0": "1", "2": "3"}


class DecodeError(ValueError):
    """A string that is not a canonical string of a trivalent graph."""


class IllegalCharacterError(DecodeError):
    pass


class UnbalancedStringError(DecodeError):
    pass


class InvalidGraphError(DecodeError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


def _check_vertex(g: TrivalentGraph, v: int) -> None:
    if not 0 <= v < len(g):
        raise KeyError(f"vertex {v} is not in the graph")


def farthest_path(g: TrivalentGraph, v: int) -> list[int]:
    """A longest simple path (in edges) starting at ``v``.

    Depth-first: each vertex extends along the child with the deepest subtree,
    keeping the lowest-id child when depths tie. The last vertex is a leaf
    (or ``v`` itself in a one-vertex graph).
    """
    _check_vertex(g, v)
    parent = {v: v}
    order = [v]
    for x in order:
        for u in sorted(g.neighbors(x)):
            if u not in parent:
                parent[u] = x
                order.append(u)
    height = dict.fromkeys(order, 0)
    best: dict[int, int] = {}
    for x in reversed(order):
        for u in sorted(g.neighbors(x)):
            if u == parent[x]:
                continue
            if x not in best or height[u] + 1 > height[x]:
                height[x] = height[u] + 1
                best[x] = u
    path = [v]
    while path[-1] in best:
        path.append(best[path[-1]])
    return path


def eccentricity(g: TrivalentGraph, v: int) -> int:
    """Largest unweighted distance from ``v`` to any vertex."""
    _check_vertex(g, v)
    dist = {v: 0}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for u, _ in g.adjacency[x]:
                if u not in dist:
                    dist[u] = dist[x] + 1
                    nxt.append(u)
        frontier = nxt
    return max(dist.values())


def center(g: TrivalentGraph) -> int:
    """The unique vertex of minimum eccentricity.

    Two farthest-vertex sweeps give a diameter; its length is even in a
    trivalent graph, and the middle vertex is the center.
    """
    return _kernels.center(g.adjacency)


def root_at_center(g: TrivalentGraph) -> TrivalentGraph:
    return g.with_root(center(g))


def tuple_names(g: TrivalentGraph) -> list[str]:
    """AHU name of every vertex of a rooted graph."""
    if g.root is None:
        raise ValueError("tuple names need a rooted graph; see root_at_center")
    names, _ = _kernels.tuple_names(g.adjacency, g.root)
    return names


def ahu_modified(g: TrivalentGraph, v: int) -> str:
    """AHU name of vertex ``v`` in the rooted graph ``g``."""
    _check_vertex(g, v)
    return tuple_names(g)[v]


def encode(g: TrivalentGraph) -> str:
    """Canonical string of ``g``: ``len == 2 * len(g)``, over ``0123``."""
    return _kernels.encode(g.adjacency)


def _scan(s: str) -> None:
    """Check alphabet and bracket balance."""
    stack = []
    for i, ch in enumerate(s):
        if ch in _OPEN:
            stack.append(ch)
        elif ch in "13":
            if not stack:
                raise UnbalancedStringError(f"unmatched {ch!r} at position {i}")
            if _OPEN[stack.pop()] != ch:
                raise UnbalancedStringError(f"mismatched {ch!r} at position {i}")
            if not stack and i != len(s) - 1:
                raise UnbalancedStringError(f"text after the root closes at position {i}")
        else:
            raise IllegalCharacterError(f"illegal character {ch!r} at position {i}")
    if stack:
        raise UnbalancedStringError(f"{len(stack)} unclosed wrapper(s)")


def parse_children(s: str, start: int = 0) -> tuple[list[str], int]:
    """Split the body of the wrapper opening at ``start`` into child substrings.

    Returns the child names and the index of the matching close. Assumes a
    balanced string.
    """
    kids = []
    i = start + 1
    while s[i] in _OPEN:
        j = _skip(s, i)
        kids.append(s[i : j + 1])
        i = j + 1
    return kids, i


def _skip(s: str, i: int) -> int:
    depth = 0
    for j in range(i, len(s)):
        depth += 1 if s[j] in _OPEN else -1
        if depth == 0:
            return j
    raise UnbalancedStringError("wrapper never closes")


def _build(s: str) -> TrivalentGraph:
    adjacency, levels = _kernels.parse_tree(s)
    # leaves are white, so the root is black exactly when its height is odd
    root_color = BLACK if max(levels) % 2 else WHITE
    other = WHITE if root_color == BLACK else BLACK
    colors = tuple(root_color if lv % 2 == 0 else other for lv in levels)
    return TrivalentGraph.unchecked(colors, adjacency, 0)


def decode(s: str) -> TrivalentGraph:
    """Rebuild a trivalent graph from its canonical string.

    Reads the grammar ``node := open node* close`` with ``(open, close)`` in
    ``{(0, 1), (2, 3)}``; a child wrapped in ``2..3`` hangs from a weight-2
    edge. Vertices are numbered in preorder, so the root is vertex 0.
    Raises :class:`IllegalCharacterError`, :class:`UnbalancedStringError` or
    :class:`InvalidGraphError` for the three ways a string can be bad.
    """
    if not isinstance(s, str) or not s:
        raise DecodeError("empty canonical string")
    _scan(s)
    if s[0] != "0":
        raise DecodeError("the root must use the 0..1 wrapper")
    g = _build(s)
    problems = validate(g)
    if problems:
        raise InvalidGraphError(
            f"{s!r} decodes to an invalid graph: " + "; ".join(map(str, problems)), problems
        )
    return g


def decode_trusted(s: str) -> TrivalentGraph:
    """:func:`decode` without checks, for strings this package just produced by encoding."""
    return _build(s)


def symmetry_classes(g: TrivalentGraph) -> list[list[int]]:
    """Partition the white vertices into classes related by a rooted automorphism.

    The graph is rooted at its center (any existing root is replaced). Two
    vertices are symmetric when they have equal names and symmetric parents;
    walking upward ends at the root, so a vertex's class is determined by the
    names along its path to the root. Classes are sorted lists, ordered by
    their smallest member.
    """
    root = center(g)
    names, parent = _kernels.tuple_names(g.adjacency, root)
    # class ids are assigned top-down, so a parent's id exists before its children need it
    order = [root]
    for x in order:
        order.extend(u for u, _ in g.adjacency[x] if parent[u] == x)
    ids: dict[tuple[int, str], int] = {}
    cls = [0] * len(g)
    for v in order[1:]:
        cls[v] = ids.setdefault((cls[parent[v]], names[v]), len(ids) + 1)
    blocks: dict[int, list[int]] = {}
    for v in g.whites:
        blocks.setdefault(cls[v], []).append(v)
    return sorted(blocks.values(), key=lambda b: b[0])


def class_representatives(g: TrivalentGraph) -> list[int]:
    """Smallest white vertex of each symmetry class, ascending."""
    return sorted(b[0] for b in symmetry_classes(g))
