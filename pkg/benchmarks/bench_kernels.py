"""Compare the pure and compiled propagation kernels.

Times path_propagate on random pinned profiles.  Both kernels get the
same inputs and their outputs are compared before timing, so a broken
build shows up as an error, not as a fast number.

Usage:
    python3 benchmarks/bench_kernels.py --sizes 8,16,32,64 --length 62
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from oddwalk.generators import random_graph
from oddwalk.kernels import NATIVE_LIMIT, _native, native_available, pure


def make_instance(rng, n_vertices, length):
    """A pinned path profile over a random target, with thinned interior.

    Edge probability shrinks with size so witness counts stay within the
    compiled kernel's 64-witness limit and both backends can be compared.
    """
    p = min(0.3, 2.0 / max(1, n_vertices - 1))
    g = random_graph(rng, n_vertices, p, multi=0.1)
    vidx = {v: i for i, v in enumerate(g.vertices)}
    wit_ends = [tuple(vidx[v] for v in g.ends[w]) for w in g.witnesses]
    full_v = (1 << len(g.vertices)) - 1
    full_w = (1 << len(g.witnesses)) - 1
    vmasks = [full_v] * (length + 1)
    vmasks[0] = 1 << rng.randrange(len(g.vertices))
    for i in range(1, length):
        if rng.random() < 0.3:
            vmasks[i] = full_v & ~(1 << rng.randrange(len(g.vertices)))
    wmasks = [full_w] * length
    return vmasks, wmasks, wit_ends, len(g.witnesses)


def time_kernel(fn, instances, repeat):
    """Best-of-median per-call seconds over the instance batch."""
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        for vmasks, wmasks, wit_ends in instances:
            fn(vmasks, wmasks, wit_ends)
        runs.append((time.perf_counter() - start) / len(instances))
    return statistics.median(runs)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="8,16,32,64",
                    help="comma-separated target vertex counts")
    ap.add_argument("--length", type=int, default=62,
                    help="path length in edges (level-5 gadget has 62)")
    ap.add_argument("--instances", type=int, default=10,
                    help="random instances per size")
    ap.add_argument("--repeat", type=int, default=15,
                    help="timing repetitions, median is reported")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    if not native_available():
        print("compiled kernel not available, timing the pure kernel only")
    print(f"{'vertices':>8} {'witnesses':>9} {'pure us':>10} "
          f"{'native us':>10} {'speedup':>8}")
    for n in sizes:
        rng = random.Random(args.seed)
        instances = []
        wit_counts = []
        while len(instances) < args.instances:
            vmasks, wmasks, wit_ends, n_wits = make_instance(rng, n, args.length)
            if n_wits == 0 or n_wits > NATIVE_LIMIT:
                continue
            instances.append((vmasks, wmasks, wit_ends))
            wit_counts.append(n_wits)
        wits = max(wit_counts)
        pure_s = time_kernel(pure.path_propagate, instances, args.repeat)
        use_native = (native_available() and n <= NATIVE_LIMIT
                      and wits <= NATIVE_LIMIT)
        if use_native:
            for vmasks, wmasks, wit_ends in instances:
                got = _native.path_propagate(vmasks, wmasks, wit_ends)
                want = pure.path_propagate(vmasks, wmasks, wit_ends)
                if (list(got[0]), list(got[1])) != (want[0], want[1]):
                    print(f"kernel outputs disagree at {n} vertices")
                    return 1
            native_s = time_kernel(_native.path_propagate, instances,
                                   args.repeat)
            print(f"{n:>8} {wits:>9} {pure_s * 1e6:>10.1f} "
                  f"{native_s * 1e6:>10.1f} {pure_s / native_s:>7.1f}x")
        else:
            print(f"{n:>8} {wits:>9} {pure_s * 1e6:>10.1f} {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
