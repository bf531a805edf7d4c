"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--max-white 9] [--repeat 3]

Times encoding, string parsing and a full enumeration under each backend. The
enumeration for the fallback runs in a subprocess with the extension hidden,
so both numbers come from the real import-time selection.
"""

import argparse
import subprocess
import sys
import textwrap
import timeit

from trivalent import _purepy
from trivalent.generator import enumerate_graphs

try:
    from trivalent import _speedups
except ImportError:
    _speedups = None

ENUMERATE = textwrap.dedent(
    """
    import sys, time
    if {hide}:
        sys.modules["trivalent._speedups"] = None
    import trivalent
    from trivalent.generator import enumerate_graphs, Mode
    t = time.perf_counter()
    enumerate_graphs({n}, Mode("{mode}"))
    print(trivalent.BACKEND, time.perf_counter() - t)
    """
)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def enumerate_time(n, mode, hide):
    script = ENUMERATE.format(n=n, mode=mode, hide=hide)
    out = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, check=True
    ).stdout.split()
    return out[0], float(out[1])


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-white", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _speedups is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    store = enumerate_graphs(args.max_white).store
    adjs = [store[c].graph.adjacency for c in store.index]
    canons = list(store.index)
    print(f"{len(adjs)} graphs up to {args.max_white} whites\n")
    print(f"{'kernel':<22}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    rows = [
        ("encode", lambda m: [m.encode(a) for a in adjs]),
        ("center", lambda m: [m.center(a) for a in adjs]),
        ("parse_tree", lambda m: [m.parse_tree(s) for s in canons]),
    ]
    for name, work in rows:
        py = best(lambda: work(_purepy), args.repeat)
        cy = best(lambda: work(_speedups), args.repeat)
        print(f"{name:<22}{py:>10.3f}{cy:>10.3f}{py / cy:>8.1f}x")
    for mode in ("naive", "symmetry"):
        _, py = enumerate_time(args.max_white, mode, True)
        _, cy = enumerate_time(args.max_white, mode, False)
        print(f"{'enumerate ' + mode:<22}{py:>10.3f}{cy:>10.3f}{py / cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
