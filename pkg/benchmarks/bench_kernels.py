"""Compare the compiled and pure-Python kernels on the hot loops.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload is run on every importable backend; the table reports the best
wall time and the speedup of the compiled backend over pure Python.
"""

from __future__ import annotations

import argparse
import itertools
import time

from parikhrs.kernels import backends
from parikhrs.presets import thue_preset


def _words(s: int, n: int) -> list[bytes]:
    return [bytes(w) for w in itertools.product(range(s), repeat=n)]


def workloads():
    ternary = _words(3, 9)
    salomaa = thue_preset("salomaa").compiled_rules
    start = bytes([1, 0, 2] * 5 + [1])  # bacbacbacbacbacb, rewrite class of 11334 words
    long_word = bytes([0, 1, 2] * 60)

    def matrix_keys(k):
        f = k.parikh_entries
        for w in ternary:
            f(w, 3)

    def subword_counts(k):
        f = k.count_subword
        u = bytes([0, 1, 2])
        for _ in range(2000):
            f(long_word, u)

    def class_bfs(k):
        k.RuleSet(salomaa).bfs(start, -1, 1_000_000)

    def expansions(k):
        rs = k.RuleSet(salomaa)
        for w in ternary[::4]:
            rs.successors(w)

    return {
        f"parikh_entries x {len(ternary)}": matrix_keys,
        "count_subword x 2000 (|w|=180)": subword_counts,
        "Salomaa class BFS (11334 words)": class_bfs,
        f"successors x {len(ternary[::4])}": expansions,
    }


def best_of(fn, kernel, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(kernel)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    found = backends()
    names = sorted(found)
    print(f"{'workload':<36}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn in workloads().items():
        times = {n: best_of(fn, found[n], args.repeat) for n in names}
        row = f"{label:<36}" + "".join(f"{times[n]:>11.3f}s" for n in names)
        if "compiled" in times:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
