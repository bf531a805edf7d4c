"""Acceptance criteria, one test each, each printing a single PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v`` or
``python3 tests/test_acceptance.py``.
"""

import itertools
import os
import random
import subprocess
import sys
import time
from collections import deque

import pytest

from trivalent.canonical import center, decode, encode
from trivalent.generator import (
    Mode,
    apply_O1,
    apply_O1star,
    apply_O2,
    enumerate_graphs,
    inverse_witness,
    reapply,
)
from trivalent.graph import WHITE, b12, b111, is_isomorphic_bruteforce, relabel, validate

DISTINCT = dict(zip(range(2, 12), (1, 3, 6, 18, 51, 167, 551, 1954, 7066, 26486)))
NAIVE_CREATED = dict(zip(range(4, 12), (11, 37, 150, 573, 2267, 8997, 36498, 149708)))
SYMMETRY_CREATED = dict(zip(range(7, 12), (467, 1781, 7099, 28852, 119168)))


def report(capsys, label, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {label}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def naive11():
    return enumerate_graphs(11, Mode.NAIVE)


@pytest.fixture(scope="module")
def symmetry11():
    return enumerate_graphs(11, Mode.SYMMETRY)


def test_distinct_counts(capsys, naive11, symmetry11):
    bad = [
        (mode, n, r.distinct_counts.get(n))
        for mode, r in (("naive", naive11), ("symmetry", symmetry11))
        for n in DISTINCT
        if r.distinct_counts.get(n) != DISTINCT[n]
    ]
    got = [naive11.distinct_counts[n] for n in DISTINCT]
    report(capsys, "distinct counts n=2..11, both modes", not bad, f"{got}; mismatches {bad}")


def test_naive_created_counts(capsys, naive11):
    got = {n: naive11.created_counts[n] for n in NAIVE_CREATED}
    report(capsys, "naive created counts n=4..11", got == NAIVE_CREATED, f"{list(got.values())}")


def test_symmetry_reduction(capsys, naive11, symmetry11):
    problems = []
    for n in range(2, 12):
        d, s, c = DISTINCT[n], symmetry11.created_counts[n], naive11.created_counts[n]
        if not d <= s <= c:
            problems.append(f"n={n}: {d} <= {s} <= {c} fails")
    reductions = {}
    for n in range(8, 12):
        base = naive11.created_counts[n]
        reductions[n] = 100.0 * (base - symmetry11.created_counts[n]) / base
        if reductions[n] < 15.0:
            problems.append(f"n={n}: reduction {reductions[n]:.2f}% < 15%")
    for n, want in SYMMETRY_CREATED.items():
        if symmetry11.created_counts[n] != want:
            problems.append(f"n={n}: created {symmetry11.created_counts[n]} != {want}")
    detail = ", ".join(f"n={n} {r:.2f}%" for n, r in reductions.items())
    got = [symmetry11.created_counts[n] for n in SYMMETRY_CREATED]
    report(
        capsys,
        "symmetry mode bounds, >=15% reduction, exact created n=7..11",
        not problems,
        f"{got}; {detail}; {problems or 'no problems'}",
    )


def test_canonical_string_is_a_complete_invariant(capsys, naive11):
    start = time.perf_counter()
    rnd = random.Random(20261017)
    graphs = []
    for n in range(2, 7):
        for rec in naive11.store.records(n):
            perm = list(rec.graph.vertices)
            rnd.shuffle(perm)
            graphs.append(relabel(rec.graph, perm))
    failures = 0
    pairs = 0
    for g, h in itertools.combinations(graphs, 2):
        pairs += 1
        if (encode(g) == encode(h)) != is_isomorphic_bruteforce(g, h, max_vertices=64):
            failures += 1
    for g in graphs:
        if not is_isomorphic_bruteforce(decode(encode(g)), g, max_vertices=64):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = len(graphs) == 79 and pairs == 79 * 78 // 2 and failures == 0 and elapsed < 120
    report(
        capsys,
        "encode equality iff isomorphism, decode round trip (<=6 whites)",
        ok,
        f"{len(graphs)} graphs, {pairs} pairs, {failures} failures, {elapsed:.1f}s",
    )


def _eccentricities(g):
    out = []
    for s in g.vertices:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u, _ in g.adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        out.append(max(dist.values()))
    return out


def _structural_problems(g):
    problems = []
    if validate(g):
        problems.append("validate")
    if not any(g.adjacency[v][0][1] == 1 for v in g.leaves):
        problems.append("no weight-1 leaf")
    ecc = _eccentricities(g)
    if any((ecc[v] % 2 == 0) != (g.colors[v] == WHITE) for v in g.vertices):
        problems.append("eccentricity parity")
    argmin = [v for v in g.vertices if ecc[v] == min(ecc)]
    if argmin != [center(g)]:
        problems.append("center")
    if len(encode(g)) != 2 * len(g):
        problems.append("string length")
    k = g.white_count
    w = g.whites[-1]
    if apply_O2(g, w).white_count != k + 1 or apply_O1(g, w).white_count != k + 2:
        problems.append("O1/O2 delta")
    for h in (b12(), b111(), g):
        if apply_O1star(g, w, h, h.whites[0]).white_count != k + h.white_count + 1:
            problems.append("O1* delta")
    return problems


def test_structural_suite(capsys, naive11):
    checked = 0
    bad = []
    for n in range(2, 9):
        for rec in naive11.store.records(n):
            checked += 1
            problems = _structural_problems(rec.graph)
            if problems:
                bad.append((rec.canon, problems))
    report(
        capsys,
        "structural invariants up to 8 whites",
        checked == sum(DISTINCT[n] for n in range(2, 9)) and not bad,
        f"{checked} graphs, {len(bad)} failing {bad[:3]}",
    )


def test_enumeration_is_reproducible(capsys, tmp_path):
    outputs = []
    for run, hash_seed in enumerate(("1", "12345")):
        out = tmp_path / f"run{run}"
        env = dict(os.environ, PYTHONHASHSEED=hash_seed)
        subprocess.run(
            [sys.executable, "-m", "trivalent", "enumerate", "--max-white", "8", "--out", str(out)],
            check=True,
            capture_output=True,
            env=env,
        )
        outputs.append(
            ((out / "catalog.jsonl").read_bytes(), (out / "stats.csv").read_bytes())
        )
    same = outputs[0] == outputs[1]
    report(
        capsys,
        "two enumerate --max-white 8 runs are byte-identical",
        same,
        f"catalog {len(outputs[0][0])} bytes, stats {len(outputs[0][1])} bytes, identical={same}",
    )


def test_inverse_witness(capsys, naive11):
    checked = 0
    bad = []
    for n in range(4, 8):
        for rec in naive11.store.records(n):
            checked += 1
            if encode(reapply(inverse_witness(rec.graph))) != rec.canon:
                bad.append(rec.canon)
    report(
        capsys,
        "inverse witness reproduces the graph, 4..7 whites",
        checked == sum(DISTINCT[n] for n in range(4, 8)) and not bad,
        f"{checked} graphs, {len(bad)} failing",
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
