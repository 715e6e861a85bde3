"""Compiled vs numpy kernels on the operations the scans spend their time in.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from fqdioph._kernels import compiled, python
from fqdioph.ffcore import make_field

CASES = [
    ("chi_table", (3, 10), lambda k, F: k.chi_table(F.p, F.n, F.tail)),
    ("eval_all deg 12", (3, 10), lambda k, F: k.eval_all(F.p, F.n, F.tail, [1] * 13)),
    ("neighbor_mask", (99991, 1), lambda k, F: k.neighbor_mask(F.p, F.n, F.tail, F.chi_table, 5)),
    ("adjacency", (3, 7), lambda k, F: k.adjacency(F.p, F.n, F.tail, F.chi_table)),
    ("max_clique q=343", (7, 3), None),
    ("max_clique q=361", (19, 2), None),
]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled is None:
        print("compiled backend not built; only the python backend is available")
    print(f"{'kernel':<20} {'field':>10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, (p, n), fn in CASES:
        F = make_field(p, n)
        if fn is None:
            adj = python.adjacency(p, n, F.tail, F.chi_table)
            fn = lambda k, F, adj=adj: k.max_clique(adj)  # noqa: E731
        tp = timed(lambda: fn(python, F), args.repeat)
        if compiled is not None:
            tc = timed(lambda: fn(compiled, F), args.repeat)
            print(f"{name:<20} {F.q:>10} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x", flush=True)
        else:
            print(f"{name:<20} {F.q:>10} {tp:>10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
