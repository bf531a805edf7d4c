"""Command-line interface: ``trivalent <command> ...``.

Exit status is 0 on success, 1 when a verification fails, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canonical import DecodeError, decode, encode
from .catalog import (
    CatalogError,
    make_tag,
    read_catalog,
    stats_table,
    to_dot,
    write_catalog,
    write_dot_files,
)
from .generator import Mode, enumerate_graphs
from .graph import Color, TrivalentGraph, validate
from .verify import run_checks


class InputError(Exception):
    """Bad input data; reported with exit status 2."""


def parse_edge_list(text: str) -> TrivalentGraph:
    """Read lines ``u v w color_u color_v``; ids may be any integers.

    Blank lines and ``#`` comments are skipped. Ids are renumbered densely in
    ascending order.
    """
    colors: dict[int, Color] = {}
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise InputError(f"edge list line {line_no}: expected 'u v w color_u color_v'")
        try:
            u, v, w = int(parts[0]), int(parts[1]), int(parts[2])
            cu, cv = Color.from_letter(parts[3]), Color.from_letter(parts[4])
        except ValueError as exc:
            raise InputError(f"edge list line {line_no}: {exc}") from None
        for x, c in ((u, cu), (v, cv)):
            if colors.setdefault(x, c) != c:
                raise InputError(f"edge list line {line_no}: vertex {x} given two colors")
        edges.append((u, v, w))
    if not colors:
        raise InputError("edge list is empty")
    ids = {x: i for i, x in enumerate(sorted(colors))}
    try:
        g = TrivalentGraph.from_edges(
            [colors[x] for x in sorted(colors)], [(ids[u], ids[v], w) for u, v, w in edges]
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    problems = validate(g)
    if problems:
        raise InputError("not a trivalent graph: " + "; ".join(map(str, problems)))
    return g


def _decode_or_fail(s: str) -> TrivalentGraph:
    try:
        return decode(s.strip())
    except DecodeError as exc:
        raise InputError(str(exc)) from None


def _graph_record(g: TrivalentGraph) -> dict:
    canon = encode(g)
    return {
        "n": g.white_count,
        "id": 0,
        "canon": canon,
        "tag": make_tag(g, 0).as_list(),
        "colors": "".join(c.letter for c in g.colors),
        "edges": [list(e) for e in g.edges()],
    }


def cmd_enumerate(args) -> int:
    def progress(n, distinct, created):
        print(f"n={n}: {distinct} distinct, {created} created", file=sys.stderr)

    result = enumerate_graphs(
        args.max_white, args.mode, exempt_seeds=not args.strict_symmetry, progress=progress
    )
    table = stats_table(result)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        write_catalog(result, os.path.join(args.out, "catalog.jsonl"))
        with open(os.path.join(args.out, "stats.csv"), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(table)
    sys.stdout.write(table)
    return 0


def cmd_canon(args) -> int:
    if args.string is not None:
        print(encode(_decode_or_fail(args.string)))
        return 0
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                canon = json.loads(line)["canon"]
            except (json.JSONDecodeError, KeyError, TypeError):
                raise InputError(f"line {line_no}: not a catalog record") from None
            print(encode(_decode_or_fail(canon)))
    else:
        print(encode(parse_edge_list(text)))
    return 0


def cmd_decode(args) -> int:
    g = _decode_or_fail(args.string)
    if args.format == "dot":
        sys.stdout.write(to_dot(g))
    else:
        print(json.dumps(_graph_record(g), separators=(", ", ": ")))
    return 0


def cmd_verify(args) -> int:
    checks = run_checks(args.max_white, args.oracle_max_white)
    for check in checks:
        print(check)
    return 0 if all(c.ok for c in checks) else 1


def _load_catalog(args):
    try:
        mode = getattr(args, "mode", Mode.NAIVE)
        return read_catalog(args.catalog, mode, not getattr(args, "strict_symmetry", False))
    except CatalogError as exc:
        raise InputError(f"{args.catalog}: {exc}") from None


def cmd_export(args) -> int:
    result = _load_catalog(args)
    paths = write_dot_files(result.store, args.out, single_file=args.single_file)
    print(f"wrote {len(paths)} file(s) to {args.out}", file=sys.stderr)
    return 0


def cmd_stats(args) -> int:
    sys.stdout.write(stats_table(_load_catalog(args)))
    return 0


def _max_white(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return value


def _add_mode(p) -> None:
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.NAIVE.value)
    p.add_argument(
        "--strict-symmetry",
        action="store_true",
        help="also reduce graphs with 2 or 3 whites by symmetry",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivalent", description="Enumerate and canonicalize trivalent 2-stratifold graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="generate all graphs up to N white vertices")
    p.add_argument("--max-white", type=_max_white, required=True)
    _add_mode(p)
    p.add_argument("--out", help="directory for catalog.jsonl and stats.csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("canon", help="print the canonical string of a graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input", help="catalog (JSON lines) or edge-list file")
    src.add_argument("--string", help="a balanced 0123 string")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("decode", help="rebuild a graph from its canonical string")
    p.add_argument("--string", required=True)
    p.add_argument("--format", choices=["dot", "jsonl"], default="dot")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="run oracle and round-trip checks")
    p.add_argument("--max-white", type=_max_white, required=True)
    p.add_argument("--oracle-max-white", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write DOT files for a catalog")
    p.add_argument("--catalog", required=True)
    p.add_argument("--format", choices=["dot"], default="dot")
    p.add_argument("--out", required=True)
    p.add_argument("--single-file", action="store_true", help="one multi-graph catalog.dot")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("stats", help="reprint the stats table of a catalog")
    p.add_argument("--catalog", required=True)
    _add_mode(p)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"trivalent {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
