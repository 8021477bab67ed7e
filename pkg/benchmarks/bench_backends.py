"""Compare the compiled and pure-Python prime-field kernels.

The compiled extension accelerates mod-p matrix composition and Kronecker
products, the two operations that dominate the exhaustive law miner.
This script times both code paths on the same workloads and confirms
they produce identical results.  The pure path is exercised directly via
the private helpers, so no reinstall is needed.

Usage: python3 benchmarks/bench_backends.py [--size N] [--reps R]
"""

import argparse
import random
import time

from weakcp import kernel
from weakcp.fields import GF
from weakcp.kernel import BACKEND, Mat, mat_compose, mat_tensor


def random_mat(rng, rows, cols, field):
    return Mat(rows, cols,
               tuple(rng.randrange(field.p) for _ in range(rows * cols)),
               field)


def timed(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def bench_pair(name, compiled_fn, pure_fn, reps):
    a, ta = timed(compiled_fn, reps)
    b, tb = timed(pure_fn, reps)
    assert a.entries == b.entries, f"{name}: backends disagree"
    speedup = tb / ta if ta > 0 else float("inf")
    print(f"{name:<28} compiled {ta * 1e3:8.2f} ms   "
          f"pure {tb * 1e3:8.2f} ms   speedup {speedup:5.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=64,
                        help="matrix dimension for the compose benchmark")
    parser.add_argument("--reps", type=int, default=5,
                        help="repetitions per measurement (best is kept)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if BACKEND != "compiled":
        raise SystemExit(
            "the compiled extension is not available; build it first "
            "(pip install -e . --no-build-isolation)"
        )

    field = GF(5)
    rng = random.Random(args.seed)
    n = args.size
    a = random_mat(rng, n, n, field)
    b = random_mat(rng, n, n, field)
    k = args.size // 8 or 2
    c = random_mat(rng, k, k, field)
    d = random_mat(rng, k, k, field)

    def pure_compose():
        return Mat(a.rows, b.cols,
                   tuple(kernel._matmul_flat(a, b, field)), field)

    def pure_tensor():
        return Mat(c.rows * d.rows, c.cols * d.cols,
                   tuple(kernel._kron_flat(c, d, field)), field)

    print(f"field GF(5), compose at {n}x{n}, tensor at {k}x{k} (x) {k}x{k}")
    bench_pair(f"compose {n}x{n}",
               lambda: mat_compose(a, b), pure_compose, args.reps)
    bench_pair(f"tensor {k}x{k}",
               lambda: mat_tensor(c, d), pure_tensor, args.reps)

    # end-to-end: the exhaustive miner at dims (2,2) over GF(2)
    from weakcp.fixtures import diagonal_algebra
    from weakcp.mine import mine_wdl

    s = diagonal_algebra("S", 2, GF(2))
    t = diagonal_algebra("T", 2, GF(2))
    t0 = time.perf_counter()
    result = mine_wdl(s, t)
    print(f"exhaustive miner (2,2)/GF(2): {time.perf_counter() - t0:6.2f} s, "
          f"{result.total} laws ({BACKEND} backend)")


if __name__ == "__main__":
    main()
