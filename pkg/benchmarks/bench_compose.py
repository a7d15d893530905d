"""Time the compiled and pure-Python alternating-path kernels on random graphs.

Run with ``python benchmarks/bench_compose.py``.  Each row reports the best of
several repeats for one graph size; both kernels must return the same pairs.
"""

from __future__ import annotations

import argparse
import itertools
import random
import timeit

from gs4 import _altpath_py, kernels


def random_instance(rng: random.Random, n: int, m: int, k: int):
    pairs = list(itertools.combinations(range(n), 2))
    g = rng.sample(pairs, m)
    h = rng.sample(pairs, m)
    iface = frozenset(rng.sample(range(n), k))
    return g, h, iface


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    try:
        from gs4 import _altpath
    except ImportError:
        print("compiled kernel not built; only the pure-Python timing is shown")
        _altpath = None

    rng = random.Random(args.seed)
    print(f"{'vertices':>8} {'edges':>6} {'iface':>5} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n, m, k in ((12, 15, 4), (24, 40, 6), (40, 80, 8), (60, 200, 14), (100, 400, 18)):
        g, h, iface = random_instance(rng, n, m, k)

        def run(impl):
            return kernels.alternating_endpoints(g, h, iface, impl=impl)

        py = min(timeit.repeat(lambda: run(_altpath_py), number=1, repeat=args.repeat)) * 1e3
        if _altpath is None:
            print(f"{n:>8} {m:>6} {k:>5} {py:>10.2f} {'-':>10} {'-':>8}")
            continue
        assert run(_altpath) == run(_altpath_py)
        cy = min(timeit.repeat(lambda: run(_altpath), number=1, repeat=args.repeat)) * 1e3
        print(f"{n:>8} {m:>6} {k:>5} {py:>10.2f} {cy:>10.2f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
