"""Tags, DOT export and the on-disk catalog and stats formats.

A catalog is UTF-8 JSON lines, one graph per line::

    {"n": 3, "id": 0, "canon": "00101011", "tag": [3, 1, 3, 2, 2, 0]}

ordered by white count, then by discovery ordinal.
"""

from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .canonical import DecodeError, decode, encode
from .generator import (
    EnumerationResult,
    GraphStore,
    Mode,
    created_counts_from_store,
)
from .graph import BLACK, TrivalentGraph, census

__all__ = [
    "Tag",
    "make_tag",
    "leaf_path_lengths",
    "to_dot",
    "write_catalog",
    "read_catalog",
    "catalog_lines",
    "stats_table",
    "write_dot_files",
    "CatalogError",
]


class CatalogError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Tag:
    white_count: int
    black_count: int
    leaf_count: int
    shortest_leaf_path: int
    largest_leaf_path: int
    id: int

    def as_list(self) -> list[int]:
        return [
            self.white_count,
            self.black_count,
            self.leaf_count,
            self.shortest_leaf_path,
            self.largest_leaf_path,
            self.id,
        ]

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.as_list())) + "]"


def _distances_from(g: TrivalentGraph, s: int) -> list[int]:
    dist = [-1] * len(g)
    dist[s] = 0
    queue = [s]
    for v in queue:
        for u, _ in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def leaf_path_lengths(g: TrivalentGraph) -> list[int]:
    """Unweighted lengths of the paths between every unordered pair of leaves."""
    leaves = g.leaves
    dist = {v: _distances_from(g, v) for v in leaves}
    return [dist[a][b] for a, b in combinations(leaves, 2)]


def make_tag(g: TrivalentGraph, id: int) -> Tag:
    """Nomenclature tag ``[W, B, L, shortest leaf path, largest leaf path, id]``.

    Leaf paths run between two distinct leaves and are counted in edges.
    """
    whites, blacks, leaves = census(g)
    lengths = leaf_path_lengths(g)
    assert lengths, "a trivalent graph always has at least two leaves"
    return Tag(whites, blacks, leaves, min(lengths), max(lengths), id)


def to_dot(g: TrivalentGraph, name: str = "G") -> str:
    """Graphviz text: black vertices filled, weight-2 edges labelled ``2``."""
    lines = [f"graph {name} {{", '  node [shape=circle, label="", width=0.25];']
    for v, c in enumerate(g.colors):
        if c == BLACK:
            lines.append(f"  {v} [style=filled, fillcolor=black];")
        else:
            lines.append(f"  {v} [style=solid, fillcolor=white];")
    for u, v, w in g.edges():
        lines.append(f'  {u} -- {v} [label="2"];' if w == 2 else f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _record(rec) -> dict:
    return {
        "n": rec.white_count,
        "id": rec.ordinal,
        "canon": rec.canon,
        "tag": make_tag(rec.graph, rec.ordinal).as_list(),
    }


def catalog_lines(store: GraphStore) -> Iterable[str]:
    for n in store.white_counts():
        for rec in store.records(n):
            yield json.dumps(_record(rec), separators=(", ", ": ")) + "\n"


def _open_for(dest, mode: str):
    if isinstance(dest, (str, os.PathLike)):
        return open(dest, mode, encoding="utf-8", newline="\n"), True
    return dest, False


def write_catalog(result: EnumerationResult | GraphStore, destination) -> None:
    """Write one JSON record per stored graph to a path or text stream."""
    store = result if isinstance(result, GraphStore) else result.store
    fh, owned = _open_for(destination, "w")
    try:
        fh.writelines(catalog_lines(store))
    finally:
        if owned:
            fh.close()


def read_catalog(
    source, mode: Mode | str = Mode.NAIVE, exempt_seeds: bool = True
) -> EnumerationResult:
    """Load a catalog written by :func:`write_catalog`, re-checking every record.

    Each canonical string is decoded and re-encoded, and its tag, white count
    and ordinal are recomputed; any disagreement raises :class:`CatalogError`
    naming the line. A catalog carries no generation history, so the result's
    created counts are the ones an enumeration in ``mode`` would report over
    the same graphs.
    """
    fh, owned = _open_for(source, "r")
    store = GraphStore()
    try:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                n, ident, canon, tag = rec["n"], rec["id"], rec["canon"], rec["tag"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise CatalogError(line_no, f"malformed record ({exc})") from None
            try:
                g = decode(canon)
            except DecodeError as exc:
                raise CatalogError(line_no, f"bad canonical string: {exc}") from None
            if encode(g) != canon:
                raise CatalogError(line_no, f"{canon!r} is not in canonical form")
            if g.white_count != n:
                raise CatalogError(line_no, f"n={n} but the graph has {g.white_count} whites")
            if canon in store:
                raise CatalogError(line_no, "duplicate graph")
            expected_id = len(store.per_white.get(n, ()))
            if ident != expected_id:
                raise CatalogError(line_no, f"id {ident} out of sequence, expected {expected_id}")
            if make_tag(g, ident).as_list() != tag:
                raise CatalogError(line_no, f"tag {tag} does not match the graph")
            store.add(canon, g)
    finally:
        if owned:
            fh.close()
    max_white = max(store.per_white, default=2)
    mode = Mode.parse(mode)
    created = created_counts_from_store(store, max_white, mode, exempt_seeds)
    return EnumerationResult(max_white, mode, store, created, exempt_seeds)


def stats_table(result: EnumerationResult, baseline: dict[int, int] | None = None) -> str:
    """CSV of ``n,total,created,reduction_percent`` per white count.

    For a symmetry-mode result the reduction is measured against ``baseline``
    (naive created counts); by default the baseline is computed from the
    stored graphs, which is exact because both modes store the same graphs.
    Naive results leave the column blank.
    """
    out = io.StringIO()
    out.write("n,total,created,reduction_percent\n")
    if result.mode is Mode.SYMMETRY and baseline is None:
        baseline = created_counts_from_store(result.store, result.max_white, Mode.NAIVE)
    distinct = result.distinct_counts
    for n in range(2, result.max_white + 1):
        created = result.created_counts.get(n, 0)
        red = ""
        if result.mode is Mode.SYMMETRY:
            base = baseline.get(n, 0)
            red = f"{100.0 * (base - created) / base:.2f}" if base else ""
        out.write(f"{n},{distinct[n]},{created},{red}\n")
    return out.getvalue()


def write_dot_files(store: GraphStore, directory, single_file: bool = False) -> list[str]:
    """Export every stored graph as DOT; returns the paths written."""
    os.makedirs(directory, exist_ok=True)
    written = []
    if single_file:
        path = os.path.join(directory, "catalog.dot")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for n in store.white_counts():
                for rec in store.records(n):
                    fh.write(to_dot(rec.graph, f"W{n}_{rec.ordinal}"))
        return [path]
    for n in store.white_counts():
        for rec in store.records(n):
            path = os.path.join(directory, f"W{n}_{rec.ordinal:06d}.dot")
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(to_dot(rec.graph, f"W{n}_{rec.ordinal}"))
            written.append(path)
    return written

