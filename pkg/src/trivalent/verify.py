"""Self-checks behind ``trivalent verify``.

Every check compares the fast path against something independent: the
brute-force isomorphism search, brute-force eccentricities, or the candidate
count formula.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .canonical import center, decode, eccentricity, encode
from .generator import (
    Mode,
    created_counts_from_store,
    enumerate_graphs,
    inverse_witness,
    reapply,
)
from .graph import WHITE, is_isomorphic_bruteforce, relabel, validate

__all__ = ["Check", "run_checks"]


@dataclass
class Check:
    name: str
    failures: int
    total: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.total - self.failures}/{self.total}{extra}"


def _shuffled(g, rng):
    perm = list(g.vertices)
    rng.shuffle(perm)
    return relabel(g, perm)


def run_checks(max_white: int, oracle_max_white: int = 6, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    naive = enumerate_graphs(max_white, Mode.NAIVE)
    sym = enumerate_graphs(max_white, Mode.SYMMETRY)
    store = naive.store
    checks = []

    same = naive.distinct_counts == sym.distinct_counts
    checks.append(Check("mode equivalence of distinct counts", 0 if same else 1, 1))
    formula = created_counts_from_store(store, max_white, Mode.NAIVE)
    checks.append(
        Check("created counts match the slot formula", 0 if formula == naive.created_counts else 1, 1)
    )

    graphs = [rec.graph for n in store.white_counts() for rec in store.records(n)]
    small = [g for g in graphs if g.white_count <= oracle_max_white]
    shuffled = [_shuffled(g, rng) for g in small]
    codes = [encode(g) for g in shuffled]
    bad = 0
    pairs = list(combinations(range(len(small)), 2))
    for i, j in pairs:
        if (codes[i] == codes[j]) != is_isomorphic_bruteforce(shuffled[i], shuffled[j]):
            bad += 1
    for g, h, code in zip(small, shuffled, codes):
        if code != encode(g) or not is_isomorphic_bruteforce(g, h):
            bad += 1
    checks.append(
        Check(
            "canonical string equality iff isomorphism",
            bad,
            len(pairs) + len(small),
            f"{len(small)} graphs with <= {oracle_max_white} whites",
        )
    )

    bad = 0
    for g in graphs:
        h = _shuffled(g, rng)
        back = decode(encode(h))
        if len(h) <= 16:
            bad += not is_isomorphic_bruteforce(back, h)
        else:
            bad += encode(back) != encode(h)
    checks.append(Check("decode(encode(g)) is isomorphic to g", bad, len(graphs)))

    bad = 0
    for g in graphs:
        h = _shuffled(g, rng)
        ecc = [eccentricity(h, v) for v in h.vertices]
        radius = min(ecc)
        centers = [v for v in h.vertices if ecc[v] == radius]
        problems = [
            bool(validate(h)),
            not any(h.adjacency[v][0][1] == 1 for v in h.leaves),
            any((ecc[v] % 2 == 0) != (h.colors[v] == WHITE) for v in h.vertices),
            centers != [center(h)],
            len(encode(h)) != 2 * len(h),
        ]
        bad += any(problems)
    checks.append(Check("structural invariants", bad, len(graphs)))

    bad = total = 0
    for g in graphs:
        if g.white_count < 4:
            continue
        total += 1
        try:
            bad += encode(reapply(inverse_witness(g))) != encode(g)
        except ValueError:
            bad += 1
    checks.append(Check("inverse witness reproduces the graph", bad, total))
    return checks
