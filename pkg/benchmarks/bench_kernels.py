"""Compare the compiled and pure-Python kernels on the n!-sized sweeps.

    python3 benchmarks/bench_kernels.py [--n 8] [--repeat 3]
"""
import argparse
import time
from itertools import permutations

from catalan_cf import _purekernels as pure
from catalan_cf.kernels import compiled
from catalan_cf.patternclass import PatternClass


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(mod, n):
    perms = list(permutations(range(1, n + 1)))
    b4 = list(PatternClass.B4.patterns)
    return {
        f"avoiders({n}, B4)": lambda: mod.avoiders(n, b4),
        f"avoiders({n}, 321)": lambda: mod.avoiders(n, [(3, 2, 1)]),
        f"vincular_avoiders({n})": lambda: mod.vincular_avoiders(n),
        f"contains x {len(perms)}": lambda: [mod.contains(s, (3, 1, 4, 2)) for s in perms],
        f"vincular2_totals x {len(perms)}": lambda: [mod.vincular2_totals(s) for s in perms],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled is None:
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")
    fast = workloads(compiled, args.n)
    slow = workloads(pure, args.n)
    print(f"{'workload':<30} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name in fast:
        a = best_of(fast[name], args.repeat)
        b = best_of(slow[name], args.repeat)
        print(f"{name:<30} {a:>10.4f} {b:>10.4f} {b / a:>7.1f}x")


if __name__ == "__main__":
    main()
