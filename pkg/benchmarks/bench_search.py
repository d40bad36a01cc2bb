"""Time the compiled and pure-Python search kernels on products of small graphs.

Usage: python3 benchmarks/bench_search.py [--repeat N]
"""

import argparse
import statistics
import time

from cartdom import _search, solvers
from cartdom.graph import cartesian_product
from cartdom.harness import FamilySpec, generate_family

CASES = [
    (("path", 4), ("cycle", 5)),
    (("cycle", 5), ("cycle", 6)),
    (("star", 5), ("path", 6)),
    (("complete", 4), ("cycle", 6)),
    (("path", 5), ("path", 6)),
    (("cycle", 6), ("cycle", 7)),
]


def time_one(g, kind, backend, repeat):
    runs = []
    for _ in range(repeat):
        solvers._solve_cached.cache_clear()
        start = time.perf_counter()
        res = solvers.domination_number(g, kind, backend=backend)
        runs.append(time.perf_counter() - start)
    return res.number, statistics.median(runs)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _search.available_backends()
    print(f"backends: {', '.join(backends)} (default {_search.BACKEND})")
    header = f"{'product':<12}{'n':>4}  {'kind':<7}{'value':>6}" + "".join(f"{b + ' ms':>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for a, b in CASES:
        factors = [generate_family(FamilySpec(*a)), generate_family(FamilySpec(*b))]
        g = cartesian_product(factors).graph
        for kind in ("plain", "total", "paired"):
            values, times = set(), []
            for backend in backends:
                value, t = time_one(g, kind, backend, args.repeat)
                values.add(value)
                times.append(t)
            assert len(values) == 1, "backends disagree"
            line = f"{g.name:<12}{g.order:>4}  {kind:<7}{values.pop():>6}" + "".join(f"{t * 1000:>14.2f}" for t in times)
            if len(times) == 2:
                line += f"{times[0] / max(times[1], 1e-9):>9.0f}x"
            print(line)


if __name__ == "__main__":
    main()
