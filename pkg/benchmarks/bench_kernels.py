"""Compare the compiled and pure-Python expansion kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--sweep-weight W]

Three workloads per backend: raw shuffle expansions, raw stuffle expansions,
and a full sweep regularizing every index up to a weight with cold memos.
"""
import argparse
import itertools
import statistics
import sys
import timeit

from mzvreg import _kernels_py, algebra, kernels, regularization
from mzvreg.indices import index_to_word, indices_up_to


def shuffle_workload():
    ws = [index_to_word(k) for k in indices_up_to(6, min_weight=6)]
    pairs = list(itertools.product(ws[:12], ws[-12:]))
    return lambda impl: [impl.shuffle_counts(u, v) for u, v in pairs]


def stuffle_workload():
    ks = list(indices_up_to(7, min_weight=7))
    pairs = list(itertools.product(ks[:16], ks[-16:]))
    return lambda impl: [impl.stuffle_counts(k, l) for k, l in pairs]


def sweep_workload(weight):
    def run(impl):
        saved = kernels.shuffle_counts, kernels.stuffle_counts
        kernels.shuffle_counts, kernels.stuffle_counts = impl.shuffle_counts, impl.stuffle_counts
        try:
            algebra.clear_memo()
            regularization.clear_memo()
            for which in ("stuffle", "shuffle"):
                for k in indices_up_to(weight):
                    regularization.regularize(k, which)
        finally:
            kernels.shuffle_counts, kernels.stuffle_counts = saved
            algebra.clear_memo()
            regularization.clear_memo()
    return run


def best_of(fn, impl, repeat):
    times = timeit.repeat(lambda: fn(impl), number=1, repeat=repeat)
    return min(times), statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sweep-weight", type=int, default=8)
    args = ap.parse_args(argv)

    compiled = kernels.compiled_module()
    backends = [_kernels_py] + ([compiled] if compiled is not None else [])
    if compiled is None:
        print("compiled extension not built; timing the Python kernels only", file=sys.stderr)

    workloads = [
        ("shuffle 12x12 words, weight 6", shuffle_workload()),
        ("stuffle 16x16 indices, weight 7", stuffle_workload()),
        (f"regularize all indices, weight <= {args.sweep_weight}", sweep_workload(args.sweep_weight)),
    ]
    print(f"| workload | {' | '.join(b.BACKEND + ' best (ms)' for b in backends)} | speedup |")
    print("|---" * (len(backends) + 2) + "|")
    for name, fn in workloads:
        fn(backends[0])  # warm imports and allocator
        best = [best_of(fn, b, args.repeat)[0] for b in backends]
        speed = f"{best[0] / best[1]:.1f}x" if len(best) > 1 else "n/a"
        cells = " | ".join(f"{t * 1e3:.1f}" for t in best)
        print(f"| {name} | {cells} | {speed} |")


if __name__ == "__main__":
    main()
