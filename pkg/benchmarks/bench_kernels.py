"""Throughput comparison of the numba-compiled kernels against the
pure-Python fallback.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from diminterp import kernels
from diminterp._accel import NUMBA_ENABLED


def _bench(label, fn, args_list, repeats=3):
    # warm-up triggers JIT compilation so it is excluded from the timing
    fn(*args_list[0])
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    rate = len(args_list) / best
    print(f"  {label:<22} {best * 1e3:8.2f} ms   {rate:12.0f} evals/s")
    return best


def _atom_args(rng, n_calls):
    out = []
    n2 = np.array([1.0, 1.0, 4.0, 4.0])
    while len(out) < n_calls:
        r = rng.uniform(0.3, 5.0, 4)
        G = np.eye(4)
        for i in range(4):
            for j in range(i + 1, 4):
                G[i, j] = G[j, i] = rng.uniform(-0.4, 0.4)
        out.append((r, G, n2, 0.25, False))
    return out


def _h2_args(rng, n_calls):
    return [(rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0),
             rng.uniform(-2.0, 0.0), rng.uniform(0.0, 2.0),
             rng.uniform(-0.9, 0.9), 0.7) for _ in range(n_calls)]


def main():
    rng = np.random.default_rng(0)
    n_calls = 20000
    atom_args = _atom_args(rng, n_calls)
    h2_args = _h2_args(rng, n_calls)

    print(f"numba available and enabled: {NUMBA_ENABLED}")
    print(f"{n_calls} evaluations per measurement, best of 3\n")

    print("atom_energy (4 electrons, exact gramian):")
    t_pure = _bench("pure python", kernels.PURE.atom_energy, atom_args)
    if kernels.ACTIVE is not kernels.PURE:
        t_jit = _bench("numba", kernels.ACTIVE.atom_energy, atom_args)
        print(f"  speedup: {t_pure / t_jit:.1f}x")

    print("\nh2_energy (cylindrical):")
    t_pure = _bench("pure python", kernels.PURE.h2_energy, h2_args)
    if kernels.ACTIVE is not kernels.PURE:
        t_jit = _bench("numba", kernels.ACTIVE.h2_energy, h2_args)
        print(f"  speedup: {t_pure / t_jit:.1f}x")

    # correctness cross-check on the same inputs
    for args in atom_args[:200]:
        a = kernels.PURE.atom_energy(*args)
        b = kernels.ACTIVE.atom_energy(*args)
        assert (a == b) or (np.isinf(a) and np.isinf(b)) \
            or abs(a - b) < 1e-12 * max(1.0, abs(a)), (a, b)
    print("\npure and accelerated paths agree on sampled inputs")


if __name__ == "__main__":
    main()
