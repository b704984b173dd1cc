#!/usr/bin/env python3
"""Compare the compiled clique-counting kernel against the pure-Python one.

Runs both kernels on the same graphs, checks that their censuses agree, and
prints wall times with the speedup factor.  Workloads are random G(n, p)
graphs plus geometric graphs from both generators, trimmed so the pure
kernel finishes in reasonable time.

Usage: python3 benchmarks/bench_cliques.py [--heavy]
  --heavy    add a denser random-geometric case (pure kernel takes minutes)
"""

import argparse
import random
import time

from geoclique.cliques import _kernel_py, _stats_from_hist, kernel_name
from geoclique.generators import generate
from geoclique.geometry import EuclideanModel, HyperbolicModel
from geoclique.graph import from_edges

try:
    from geoclique.cliques import _kernel_cy
except ImportError:
    _kernel_cy = None


def gnp(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


def census(hist):
    return _stats_from_hist(list(hist), 0.0)


def bench(label, g, repeats=1):
    t0 = time.perf_counter()
    for _ in range(repeats):
        pure = census(_kernel_py.count_and_visit(g, None))
    t_pure = (time.perf_counter() - t0) / repeats

    t0 = time.perf_counter()
    for _ in range(repeats):
        fast = census(_kernel_cy.count_histogram(g.indptr, g.indices))
    t_fast = (time.perf_counter() - t0) / repeats

    assert (pure.M, pure.omega, pure.histogram) == \
        (fast.M, fast.omega, fast.histogram), f"kernel mismatch on {label}"
    print(f"{label:<34} M={pure.M:>12,}  pure {t_pure:>8.3f}s  "
          f"compiled {t_fast:>8.3f}s  speedup {t_pure / t_fast:>6.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true",
                        help="include a slow dense case")
    args = parser.parse_args()

    if _kernel_cy is None:
        raise SystemExit("compiled kernel not available; build the extension "
                         "first (pip install -e . --no-build-isolation)")
    print(f"default kernel at import: {kernel_name()}\n")

    cases = [
        ("G(300, 0.1)", gnp(300, 0.1, seed=1), 3),
        ("G(150, 0.5)", gnp(150, 0.5, seed=2), 1),
        ("euclidean n=400 r=0.4 seed=0",
         generate(EuclideanModel(n=400, r=0.4), seed=0)[0], 1),
        ("hyperbolic n=3200 gamma=2.2 seed=0",
         generate(HyperbolicModel(n=3200, gamma=2.2), seed=0)[0], 1),
    ]
    if args.heavy:
        cases.append(("euclidean n=800 r=0.4 seed=0",
                      generate(EuclideanModel(n=800, r=0.4), seed=0)[0], 1))

    for label, g, repeats in cases:
        bench(label, g, repeats=repeats)


if __name__ == "__main__":
    main()
