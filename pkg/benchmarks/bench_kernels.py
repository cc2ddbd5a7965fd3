"""Benchmark the compiled kernels against the pure numpy fallback.

Usage: python benchmarks/bench_kernels.py [--n-expand 8] [--n-star 6]
       [--repeat 3]
"""

import argparse
import time

import numpy as np

from kmm.kernels import implementations
from kmm import bloch


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def random_state(n, rng):
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return amps / np.linalg.norm(amps)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-expand", type=int, default=8,
                        help="qubits for the full Bloch expansion benchmark")
    parser.add_argument("--n-star", type=int, default=6,
                        help="qubits for the star-product benchmark "
                             "(dense support, pairs grow as 16**n)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = implementations()
    if len(impls) == 1:
        print("compiled kernels not built; benchmarking the fallback only")
    rng = np.random.default_rng(1)

    amps = random_state(args.n_expand, rng)
    print(f"\nexpand_pure, n={args.n_expand} ({4 ** args.n_expand} components)")
    baseline = None
    for name, impl in impls.items():
        best, _ = timed(lambda: impl.expand_pure(amps, args.n_expand), args.repeat)
        speedup = "" if baseline is None else f"  ({baseline / best:.1f}x)"
        baseline = baseline or best
        print(f"  {name:9s} {best * 1e3:9.2f} ms{speedup}")

    n = args.n_star
    amps = random_state(n, rng)
    vec = bloch.bloch_from_state(bloch.StateVector(n, amps))
    keys = np.array(vec.support(), dtype=np.int64)
    vals = np.array([vec.components[int(k)] for k in keys])
    print(f"\nstar_accumulate, n={n} (support {keys.size}, "
          f"{keys.size ** 2 / 1e6:.1f}M pairs)")
    baseline = None
    for name, impl in impls.items():
        best, _ = timed(lambda: impl.star_accumulate(keys, vals, n), args.repeat)
        speedup = "" if baseline is None else f"  ({baseline / best:.1f}x)"
        baseline = baseline or best
        print(f"  {name:9s} {best * 1e3:9.2f} ms{speedup}")

    m = 512
    xs = rng.integers(0, 1 << args.n_expand, size=m).astype(np.int64)
    zs = rng.integers(0, 1 << args.n_expand, size=m).astype(np.int64)
    amps = random_state(args.n_expand, rng)
    print(f"\nexpectations, n={args.n_expand} (batch of {m})")
    baseline = None
    for name, impl in impls.items():
        best, _ = timed(lambda: impl.expectations(amps, xs, zs), args.repeat)
        speedup = "" if baseline is None else f"  ({baseline / best:.1f}x)"
        baseline = baseline or best
        print(f"  {name:9s} {best * 1e3:9.2f} ms{speedup}")

    results = {}
    for name, impl in impls.items():
        results[name] = impl.expand_pure(amps, args.n_expand)
    if len(results) == 2:
        diff = np.max(np.abs(results["python"] - results["compiled"]))
        print(f"\nbackend agreement: max |diff| = {diff:.2e}")


if __name__ == "__main__":
    main()
