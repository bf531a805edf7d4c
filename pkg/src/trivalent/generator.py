"""The O1, O2 and O1* operations and the exhaustive enumeration driver.

Every trivalent graph with ``n >= 4`` white vertices arises from a smaller one
by one of three moves, each grafting a seed tree onto a white vertex:

* O2 hangs a B12 tree from the white vertex by its weight-2 edge (+1 white),
* O1 hangs a B111 tree from the white vertex (+2 whites),
* O1* joins white vertices of two graphs through a B111 tree (+1 white).

:func:`enumerate_graphs` applies all three to every stored graph, layer by
layer, and keeps one representative per canonical string.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import _kernels
from .canonical import class_representatives, decode_trusted
from .graph import BLACK, WHITE, TrivalentGraph, b12, b111

__all__ = [
    "Mode",
    "apply_O1",
    "apply_O2",
    "apply_O1star",
    "GraphRecord",
    "GraphStore",
    "EnumerationResult",
    "enumerate_graphs",
    "created_counts_from_store",
    "Witness",
    "inverse_witness",
    "reapply",
]


class Mode(str, enum.Enum):
    NAIVE = "naive"
    SYMMETRY = "symmetry"

    @classmethod
    def parse(cls, value: "Mode | str") -> "Mode":
        if isinstance(value, Mode):
            return value
        aliases = {"naive": cls.NAIVE, "symmetry": cls.SYMMETRY, "symmetryreduced": cls.SYMMETRY}
        try:
            return aliases[value.lower().replace("_", "").replace("-", "")]
        except KeyError:
            raise ValueError(f"unknown mode {value!r}; use 'naive' or 'symmetry'") from None


def _require_white(g: TrivalentGraph, w: int) -> None:
    if not 0 <= w < len(g):
        raise ValueError(f"vertex {w} is not in the graph")
    if g.colors[w] != WHITE:
        raise ValueError(f"vertex {w} is black; operations act on white vertices")


def _graft_o2(adj, w: int) -> list:
    n = len(adj)
    new = list(adj)
    new[w] = (*adj[w], (n, 2))
    new.append(((w, 2), (n + 1, 1)))
    new.append(((n, 1),))
    return new


def _graft_o1(adj, w: int) -> list:
    n = len(adj)
    new = list(adj)
    new[w] = (*adj[w], (n, 1))
    new.append(((w, 1), (n + 1, 1), (n + 2, 1)))
    new.append(((n, 1),))
    new.append(((n, 1),))
    return new


def _join_o1star(adj1, w1: int, adj2, w2: int) -> list:
    off = len(adj1)
    b = off + len(adj2)
    new = list(adj1)
    new.extend(tuple((u + off, wt) for u, wt in row) for row in adj2)
    new[w1] = (*new[w1], (b, 1))
    new[w2 + off] = (*new[w2 + off], (b, 1))
    new.append(((w1, 1), (w2 + off, 1), (b + 1, 1)))
    new.append(((b, 1),))
    return new


def apply_O2(g: TrivalentGraph, w: int) -> TrivalentGraph:
    """Hang a B12 tree from white vertex ``w``; the new leaf sits on the weight-1 edge."""
    _require_white(g, w)
    return TrivalentGraph((*g.colors, BLACK, WHITE), tuple(_graft_o2(g.adjacency, w)))


def apply_O1(g: TrivalentGraph, w: int) -> TrivalentGraph:
    """Identify ``w`` with one white vertex of a fresh B111 tree.

    The other two B111 whites become leaves. Edges already at ``w`` stay put.
    """
    _require_white(g, w)
    return TrivalentGraph((*g.colors, BLACK, WHITE, WHITE), tuple(_graft_o1(g.adjacency, w)))


def apply_O1star(g1: TrivalentGraph, w1: int, g2: TrivalentGraph, w2: int) -> TrivalentGraph:
    """Join ``g1`` and ``g2`` through a B111 tree at ``w1`` and ``w2``.

    Vertices of ``g2`` are shifted by ``len(g1)``; the joining black vertex and
    its free leaf come last.
    """
    _require_white(g1, w1)
    _require_white(g2, w2)
    colors = (*g1.colors, *g2.colors, BLACK, WHITE)
    return TrivalentGraph(colors, tuple(_join_o1star(g1.adjacency, w1, g2.adjacency, w2)))


@dataclass
class GraphRecord:
    canon: str
    graph: TrivalentGraph
    white_count: int
    ordinal: int
    _reps: list[int] | None = field(default=None, repr=False)

    @property
    def representatives(self) -> list[int]:
        """One white vertex per symmetry class (the smallest id)."""
        if self._reps is None:
            self._reps = class_representatives(self.graph)
        return self._reps


class GraphStore:
    """Canonical-string keyed set of graphs, grouped by white count.

    Stored graphs are the decoded form of their canonical string, so a graph's
    vertex ids depend only on its isomorphism class. Keys are trusted to be
    encoder output; use :func:`~trivalent.canonical.decode` for foreign text.
    """

    def __init__(self):
        self.index: dict[str, GraphRecord] = {}
        self.per_white: dict[int, list[str]] = {}

    def __len__(self) -> int:
        return len(self.index)

    def __contains__(self, canon: str) -> bool:
        return canon in self.index

    def __getitem__(self, canon: str) -> GraphRecord:
        return self.index[canon]

    def add(self, canon: str, graph: TrivalentGraph | None = None) -> bool:
        """Insert ``canon``; return False (and do nothing) if it is already stored."""
        if canon in self.index:
            return False
        g = decode_trusted(canon) if graph is None else graph
        n = g.white_count
        group = self.per_white.setdefault(n, [])
        self.index[canon] = GraphRecord(canon, g, n, len(group))
        group.append(canon)
        return True

    def records(self, n: int) -> list[GraphRecord]:
        return [self.index[c] for c in self.per_white.get(n, ())]

    def white_counts(self) -> list[int]:
        return sorted(self.per_white)


@dataclass
class EnumerationResult:
    max_white: int
    mode: Mode
    store: GraphStore
    created_counts: dict[int, int]
    exempt_seeds: bool = True

    @property
    def distinct_counts(self) -> dict[int, int]:
        return {n: len(self.store.per_white.get(n, ())) for n in range(2, self.max_white + 1)}


def _slots(rec: GraphRecord, reduce: bool) -> list[int]:
    return rec.representatives if reduce else rec.graph.whites


def _candidates(store: GraphStore, n: int, reduce_for: Callable[[int], bool]) -> Iterator[list]:
    """Yield the adjacency of every candidate with ``n`` whites, in a fixed order."""
    for rec in store.records(n - 1):
        adj = rec.graph.adjacency
        for w in _slots(rec, reduce_for(n - 1)):
            yield _graft_o2(adj, w)
    for rec in store.records(n - 2):
        adj = rec.graph.adjacency
        for w in _slots(rec, reduce_for(n - 2)):
            yield _graft_o1(adj, w)
    for i in range(2, n - 2):
        j = n - 1 - i
        left, right = store.records(i), store.records(j)
        right_slots = [(r.graph.adjacency, _slots(r, reduce_for(j))) for r in right]
        for rec in left:
            adj1 = rec.graph.adjacency
            for w1 in _slots(rec, reduce_for(i)):
                for adj2, ws in right_slots:
                    for w2 in ws:
                        yield _join_o1star(adj1, w1, adj2, w2)


def enumerate_graphs(
    max_white: int,
    mode: Mode | str = Mode.NAIVE,
    exempt_seeds: bool = True,
    progress: Callable[[int, int, int], None] | None = None,
) -> EnumerationResult:
    """Generate every trivalent graph with ``2..max_white`` white vertices.

    In ``symmetry`` mode each operation is applied at one white vertex per
    symmetry class instead of at every white vertex. With ``exempt_seeds``
    the graphs with two and three whites (the seeds and the O2 children of
    B12) are still expanded at every white vertex (11 candidates at n=4
    rather than 8); pass False to reduce them too.

    ``created_counts[n]`` counts candidates before deduplication; seeds count
    as created. ``progress(n, distinct, created)`` is called after each layer.
    """
    if max_white < 2:
        raise ValueError(f"max_white must be at least 2, got {max_white}")
    mode = Mode.parse(mode)
    store = GraphStore()
    created: dict[int, int] = {}

    def reduce_for(k: int) -> bool:
        return mode is Mode.SYMMETRY and not (exempt_seeds and k <= 3)

    seed2 = b12()
    store.add(_kernels.encode(seed2.adjacency))
    created[2] = 1
    if progress:
        progress(2, 1, 1)
    if max_white >= 3:
        store.add(_kernels.encode(b111().adjacency))
        created[3] = 1
        for w in _slots(store.records(2)[0], reduce_for(2)):
            store.add(_kernels.encode(_graft_o2(store.records(2)[0].graph.adjacency, w)))
            created[3] += 1
        if progress:
            progress(3, len(store.per_white[3]), created[3])

    encode = _kernels.encode
    for n in range(4, max_white + 1):
        count = 0
        for adj in _candidates(store, n, reduce_for):
            count += 1
            store.add(encode(adj))
        created[n] = count
        if progress:
            progress(n, len(store.per_white.get(n, ())), count)
    return EnumerationResult(max_white, mode, store, created, exempt_seeds)


def created_counts_from_store(
    store: GraphStore, max_white: int, mode: Mode | str = Mode.NAIVE, exempt_seeds: bool = True
) -> dict[int, int]:
    """Candidate counts an enumeration would report, computed without generating.

    Each O2/O1 source contributes its number of slots; each O1* pair of lists
    contributes the product of their slot totals.
    """
    mode = Mode.parse(mode)

    def total(k: int) -> int:
        reduce = mode is Mode.SYMMETRY and not (exempt_seeds and k <= 3)
        return sum(len(_slots(r, reduce)) for r in store.records(k))

    totals = {k: total(k) for k in range(2, max_white + 1)}
    out = {2: 1}
    if max_white >= 3:
        out[3] = 1 + totals[2]
    for n in range(4, max_white + 1):
        c = totals[n - 1] + totals[n - 2]
        c += sum(totals[i] * totals[n - 1 - i] for i in range(2, n - 2))
        out[n] = c
    return out


@dataclass(frozen=True)
class Witness:
    """How a graph arises from smaller ones: ``op`` applied to ``parts`` at ``anchors``."""

    op: str
    parts: tuple[TrivalentGraph, ...]
    anchors: tuple[int, ...]


def _induced(g: TrivalentGraph, keep: list[int]) -> tuple[TrivalentGraph, dict[int, int]]:
    ids = {v: i for i, v in enumerate(keep)}
    edges = [(ids[u], ids[v], w) for u, v, w in g.edges() if u in ids and v in ids]
    return TrivalentGraph.from_edges([g.colors[v] for v in keep], edges), ids


def _component(g: TrivalentGraph, start: int, removed: set[int]) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen and u not in removed:
                seen.add(u)
                stack.append(u)
    return sorted(seen)


def _classify(g: TrivalentGraph, leaf: int) -> str:
    b = g.adjacency[leaf][0][0]
    others = [u for u in g.neighbors(b) if u != leaf]
    if len(others) == 1:
        return "O2"
    return "O1" if any(g.degree(u) == 1 for u in others) else "O1*"


_PREFERENCE = {"O1*": 0, "O1": 1, "O2": 2}


def inverse_witness(g: TrivalentGraph) -> Witness:
    """Undo one operation that could have produced ``g``.

    Removes a leaf ``w`` on a weight-1 edge together with its black neighbor
    ``b``. If ``b`` has degree 2 this undoes O2; if ``b`` has a second leaf
    it undoes O1; otherwise the rest splits into the two inputs of O1*. Among
    the eligible leaves an O1* reading is preferred, then O1, then O2, and
    then the lowest id. Seeds (and any graph whose precursor would have
    fewer than two whites) raise ValueError.
    """
    leaves = [v for v in g.leaves if g.adjacency[v][0][1] == 1]
    if not leaves:
        raise ValueError("graph has no leaf on a weight-1 edge")
    leaf = min(leaves, key=lambda v: (_PREFERENCE[_classify(g, v)], v))
    op = _classify(g, leaf)
    b = g.adjacency[leaf][0][0]
    others = [u for u in g.neighbors(b) if u != leaf]
    if op == "O2":
        part, ids = _induced(g, [v for v in g.vertices if v not in (leaf, b)])
        witness = Witness("O2", (part,), (ids[others[0]],))
    elif op == "O1":
        spare, anchor = sorted(others, key=lambda u: (g.degree(u) != 1, u))
        part, ids = _induced(g, [v for v in g.vertices if v not in (leaf, b, spare)])
        witness = Witness("O1", (part,), (ids[anchor],))
    else:
        parts, anchors = [], []
        for v in others:
            part, ids = _induced(g, _component(g, v, {leaf, b}))
            parts.append(part)
            anchors.append(ids[v])
        witness = Witness("O1*", tuple(parts), tuple(anchors))
    if any(p.white_count < 2 for p in witness.parts):
        raise ValueError("seed graphs have no precursor")
    return witness


def reapply(witness: Witness) -> TrivalentGraph:
    if witness.op == "O2":
        return apply_O2(witness.parts[0], witness.anchors[0])
    if witness.op == "O1":
        return apply_O1(witness.parts[0], witness.anchors[0])
    if witness.op == "O1*":
        (g1, g2), (w1, w2) = witness.parts, witness.anchors
        return apply_O1star(g1, w1, g2, w2)
    raise ValueError(f"unknown operation {witness.op!r}")
