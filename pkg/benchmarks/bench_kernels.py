"""Benchmark the compiled partition-check kernels against the numpy
fallback.

Times we_deviation, eq_deviation, and commutator_deviation on random
connected graphs of growing size, printing one table row per (n, backend)
with the speedup of the compiled path.  Run as a script:

    python3 benchmarks/bench_kernels.py [--sizes 200,1000,4000] [--reps 5]

The numbers justify shipping the extension: the checks sit in the inner
loop of exhaustive partition sweeps, where the oracle calls them once per
set partition (Bell(12) is about 4.2 million).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wepart import Graph, Partition, perron
from wepart import _pykernels as pure

try:
    from wepart import _ckernels as compiled
except ImportError:
    compiled = None


def random_instance(n: int, rng: np.random.Generator):
    """Connected graph on n vertices with ~8n edges, plus a random
    partition into about sqrt(n) cells."""
    extra = np.array([(int(rng.integers(1, n)), int(rng.integers(1, n)))
                      for _ in range(8 * n)])
    edges = {(i, i + 1) for i in range(1, n)}
    for a, b in extra:
        if a != b:
            edges.add((min(a, b), max(a, b)))
    g = Graph(n, sorted(edges))
    m = max(1, int(round(n ** 0.5)))
    assignment = rng.integers(0, m, size=n)
    assignment[rng.permutation(n)[:m]] = np.arange(m)
    return g, Partition(assignment.tolist())


def bench(fn, args, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="200,1000,4000",
                        help="comma-separated vertex counts")
    parser.add_argument("--reps", type=int, default=5,
                        help="repetitions per timing (best is kept)")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if compiled is None:
        print("compiled extension not available; showing numpy fallback only")

    rng = np.random.default_rng(0)
    header = f"{'kernel':<22} {'n':>6} {'numpy':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        g, p = random_instance(n, rng)
        indptr, indices = g.csr
        nu = perron(g, tol=1e-10).nu
        cell = np.asarray(p.assignment, dtype=np.int32)
        cases = [
            ("we_deviation", (indptr, indices, nu, cell, p.m)),
            ("eq_deviation", (indptr, indices, cell, p.m)),
            ("commutator_deviation", (indptr, indices, nu, cell, p.m)),
        ]
        for name, call_args in cases:
            t_py = bench(getattr(pure, name), call_args, args.reps)
            if compiled is not None:
                t_c = bench(getattr(compiled, name), call_args, args.reps)
                got_py = getattr(pure, name)(*call_args)
                got_c = getattr(compiled, name)(*call_args)
                if abs(float(got_py) - float(got_c)) > 1e-9:
                    raise SystemExit(
                        f"backend mismatch on {name} at n={n}: "
                        f"{got_py} vs {got_c}")
                print(f"{name:<22} {n:>6} {t_py * 1e3:>9.3f}m "
                      f"{t_c * 1e3:>9.3f}m {t_py / t_c:>7.1f}x")
            else:
                print(f"{name:<22} {n:>6} {t_py * 1e3:>9.3f}m "
                      f"{'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
