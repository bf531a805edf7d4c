"""Trivalent graphs: edge-weighted, bicolored trees.

White vertices stand for genus-0 surface pieces, black vertices for singular
circles. Edge weights are 1 or 2. A :class:`TrivalentGraph` is immutable;
vertex ids are always the dense range ``0..len(g)-1``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Color",
    "WHITE",
    "BLACK",
    "TrivalentGraph",
    "Violation",
    "b12",
    "b111",
    "validate",
    "census",
    "relabel",
    "is_isomorphic_bruteforce",
    "iter_isomorphisms",
    "GraphSizeError",
]

WEIGHTS = (1, 2)


class Color(enum.IntEnum):
    WHITE = 0
    BLACK = 1

    @property
    def letter(self) -> str:
        return "W" if self is Color.WHITE else "B"

    @classmethod
    def from_letter(cls, s: str) -> "Color":
        try:
            return {"W": cls.WHITE, "B": cls.BLACK}[s.upper()]
        except KeyError:
            raise ValueError(f"unknown color {s!r}, expected W or B") from None


WHITE = Color.WHITE
BLACK = Color.BLACK


class GraphSizeError(ValueError):
    """Raised when the brute-force oracle is asked to search a graph that is too big."""


@dataclass(frozen=True)
class TrivalentGraph:
    """An immutable bicolored tree with edge weights in {1, 2}.

    ``adjacency[v]`` is a tuple of ``(neighbor, weight)`` pairs in insertion
    order. Build instances with :meth:`from_edges` unless you already have a
    well-formed adjacency structure.
    """

    colors: tuple[Color, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    root: int | None = None

    def __post_init__(self):
        if len(self.colors) != len(self.adjacency):
            raise ValueError("colors and adjacency disagree on vertex count")
        n = len(self.colors)
        for v, nbrs in enumerate(self.adjacency):
            for u, w in nbrs:
                if w not in WEIGHTS:
                    raise ValueError(f"edge {v}-{u} has weight {w}, expected 1 or 2")
                if not 0 <= u < n:
                    raise ValueError(f"edge {v}-{u} points outside the vertex range")
        if self.root is not None and not 0 <= self.root < n:
            raise ValueError(f"root {self.root} is not a vertex")

    @classmethod
    def unchecked(cls, colors, adjacency, root=None) -> "TrivalentGraph":
        """Construct without the range and weight checks (inputs built by this package)."""
        g = object.__new__(cls)
        object.__setattr__(g, "colors", colors)
        object.__setattr__(g, "adjacency", adjacency)
        object.__setattr__(g, "root", root)
        return g

    @classmethod
    def from_edges(
        cls,
        colors: Sequence[Color | int | str],
        edges: Iterable[tuple[int, int, int]],
        root: int | None = None,
    ) -> "TrivalentGraph":
        """Build a graph from a color per vertex and ``(u, v, weight)`` triples."""
        cols = tuple(Color.from_letter(c) if isinstance(c, str) else Color(c) for c in colors)
        adj: list[list[tuple[int, int]]] = [[] for _ in cols]
        for u, v, w in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < len(cols) and 0 <= v < len(cols)):
                raise ValueError(f"edge {u}-{v} points outside the vertex range")
            adj[u].append((v, w))
            adj[v].append((u, w))
        return cls(cols, tuple(tuple(a) for a in adj), root)

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def vertices(self) -> range:
        return range(len(self.colors))

    def neighbors(self, v: int) -> list[int]:
        return [u for u, _ in self.adjacency[v]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def weight(self, u: int, v: int) -> int:
        for x, w in self.adjacency[u]:
            if x == v:
                return w
        raise KeyError(f"no edge {u}-{v}")

    def edges(self) -> list[tuple[int, int, int]]:
        """Each undirected edge once, as ``(u, v, weight)`` with ``u < v``."""
        return [(u, v, w) for u, nbrs in enumerate(self.adjacency) for v, w in nbrs if u < v]

    @property
    def whites(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == WHITE]

    @property
    def blacks(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == BLACK]

    @property
    def leaves(self) -> list[int]:
        return [v for v, nbrs in enumerate(self.adjacency) if len(nbrs) == 1]

    @property
    def white_count(self) -> int:
        return sum(1 for c in self.colors if c == WHITE)

    def with_root(self, root: int | None) -> "TrivalentGraph":
        return TrivalentGraph(self.colors, self.adjacency, root)

    def __repr__(self) -> str:
        cols = "".join(c.letter for c in self.colors)
        return f"TrivalentGraph({cols!r}, {self.edges()!r}, root={self.root})"


def b12() -> TrivalentGraph:
    """One black vertex joined to a white leaf by weight 1 and another by weight 2."""
    return TrivalentGraph.from_edges([BLACK, WHITE, WHITE], [(0, 1, 1), (0, 2, 2)])


def b111() -> TrivalentGraph:
    """One black vertex joined to three white leaves, all weights 1."""
    return TrivalentGraph.from_edges(
        [BLACK, WHITE, WHITE, WHITE], [(0, 1, 1), (0, 2, 1), (0, 3, 1)]
    )


@dataclass(frozen=True)
class Violation:
    """One broken structural invariant, with the vertices that break it."""

    kind: str
    vertices: tuple[int, ...] = ()
    detail: str = ""

    def __str__(self) -> str:
        where = f" at {list(self.vertices)}" if self.vertices else ""
        extra = f": {self.detail}" if self.detail else ""
        return f"{self.kind}{where}{extra}"


def _components(g: TrivalentGraph) -> list[list[int]]:
    seen = [False] * len(g)
    comps = []
    for s in g.vertices:
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u, _ in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def validate(g: TrivalentGraph) -> list[Violation]:
    """Check every structural invariant of a trivalent graph.

    Returns an empty list for a valid graph, otherwise one :class:`Violation`
    per broken invariant (all of them, not only the first).
    """
    out: list[Violation] = []
    n = len(g)
    if n == 0:
        return [Violation("EmptyGraph")]

    asym = []
    for v, nbrs in enumerate(g.adjacency):
        for u, w in nbrs:
            if (v, w) not in g.adjacency[u]:
                asym.append((v, u))
        dup = [u for u, k in Counter(u for u, _ in nbrs).items() if k > 1]
        if dup:
            out.append(Violation("MultiEdgeViolation", (v, *dup)))
    if asym:
        out.append(
            Violation("AsymmetricAdjacency", tuple(sorted({x for e in asym for x in e})))
        )

    comps = _components(g)
    if len(comps) > 1:
        out.append(
            Violation("Disconnected", tuple(c[0] for c in comps), f"{len(comps)} components")
        )
    n_edges = sum(len(a) for a in g.adjacency) // 2
    if n_edges != n - 1:
        out.append(Violation("EdgeCountViolation", (), f"{n_edges} edges for {n} vertices"))

    mono = sorted(
        {(min(u, v), max(u, v)) for u, v, _ in _directed_edges(g) if g.colors[u] == g.colors[v]}
    )
    if mono:
        out.append(
            Violation(
                "BipartiteViolation", tuple(x for e in mono for x in e), f"same-color edges {mono}"
            )
        )

    leaves = g.leaves
    black_leaves = [v for v in leaves if g.colors[v] == BLACK]
    if black_leaves:
        out.append(Violation("BlackLeafViolation", tuple(black_leaves)))

    bad_degree, bad_pattern = [], []
    for v in g.blacks:
        ws = sorted(w for _, w in g.adjacency[v])
        if len(ws) not in (2, 3):
            bad_degree.append(v)
        elif (len(ws) == 2 and ws != [1, 2]) or (len(ws) == 3 and ws != [1, 1, 1]):
            bad_pattern.append(v)
    if bad_degree:
        out.append(Violation("BlackDegreeViolation", tuple(bad_degree)))
    if bad_pattern:
        out.append(Violation("WeightPatternViolation", tuple(bad_pattern)))

    if not any(g.adjacency[v][0][1] == 1 for v in leaves):
        out.append(Violation("NoWeightOneLeaf", tuple(leaves)))

    if g.root is not None and not 0 <= g.root < n:
        out.append(Violation("BadRoot", (g.root,)))
    return out


def _directed_edges(g: TrivalentGraph):
    for u, nbrs in enumerate(g.adjacency):
        for v, w in nbrs:
            yield u, v, w


def census(g: TrivalentGraph) -> tuple[int, int, int]:
    """``(white count, black count, leaf count)``."""
    whites = g.white_count
    return whites, len(g) - whites, len(g.leaves)


def relabel(g: TrivalentGraph, perm: Mapping[int, int] | Sequence[int]) -> TrivalentGraph:
    """Return the isomorphic graph in which vertex ``v`` is renamed ``perm[v]``.

    ``perm`` must be a bijection on ``range(len(g))``.
    """
    n = len(g)
    image = [perm[v] for v in range(n)]
    if sorted(image) != list(range(n)):
        raise ValueError("relabel needs a bijection on the vertex set")
    colors = [WHITE] * n
    adj: list[tuple[tuple[int, int], ...]] = [()] * n
    for v in range(n):
        colors[image[v]] = g.colors[v]
        adj[image[v]] = tuple((image[u], w) for u, w in g.adjacency[v])
    root = None if g.root is None else image[g.root]
    return TrivalentGraph(tuple(colors), tuple(adj), root)


def _signature(g: TrivalentGraph, v: int) -> tuple:
    return (g.colors[v], len(g.adjacency[v]), tuple(sorted(w for _, w in g.adjacency[v])))


def is_isomorphic_bruteforce(g: TrivalentGraph, h: TrivalentGraph, max_vertices: int = 16) -> bool:
    """Decide isomorphism by exhaustive search over vertex bijections.

    This is the test oracle: it shares no code with the canonical encoder.
    Graphs above ``max_vertices`` are refused with :class:`GraphSizeError`.
    """
    return next(iter_isomorphisms(g, h, max_vertices), None) is not None


def iter_isomorphisms(
    g: TrivalentGraph,
    h: TrivalentGraph,
    max_vertices: int = 16,
    pinned: Mapping[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every weight- and color-preserving bijection ``g -> h``.

    Each result is a tuple ``phi`` with ``phi[v]`` the image of ``v``.
    ``pinned`` forces chosen images, e.g. ``{root_g: root_h}`` for rooted
    isomorphisms. Candidate images are restricted to vertices with the same
    color, degree and incident-weight multiset, and partial maps grow only
    while every mapped edge keeps its weight; neither changes the answer.
    """
    if len(g) > max_vertices or len(h) > max_vertices:
        raise GraphSizeError(
            f"brute-force isomorphism limited to {max_vertices} vertices "
            f"(got {len(g)} and {len(h)}); compare canonical strings instead"
        )
    if len(g) != len(h):
        return
    sig_g = [_signature(g, v) for v in g.vertices]
    sig_h = [_signature(h, v) for v in h.vertices]
    if Counter(sig_g) != Counter(sig_h):
        return

    n = len(g)
    candidates = [[u for u in h.vertices if sig_h[u] == sig_g[v]] for v in g.vertices]
    for v, u in (pinned or {}).items():
        candidates[v] = [u] if u in candidates[v] else []
    order = sorted(g.vertices, key=lambda v: (len(candidates[v]), v))
    wmap_g = [dict(a) for a in g.adjacency]
    wmap_h = [dict(a) for a in h.adjacency]
    phi = [-1] * n
    used = [False] * n

    def fits(v: int, u: int) -> bool:
        mapped = 0
        for x, w in wmap_g[v].items():
            y = phi[x]
            if y >= 0:
                if wmap_h[u].get(y) != w:
                    return False
                mapped += 1
        # no mapped h-neighbor of u may come from a non-neighbor of v
        return sum(1 for y in wmap_h[u] if used[y]) == mapped

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(phi)
            return
        v = order[i]
        for u in candidates[v]:
            if used[u] or not fits(v, u):
                continue
            phi[v], used[u] = u, True
            yield from extend(i + 1)
            phi[v], used[u] = -1, False

    yield from extend(0)
