"""Compare the numba and pure-numpy kernel paths on batched element masses.

    python benchmarks/bench_kernels.py [n_elements]
"""
import sys
import time

import numpy as np

from wedgemass import _kernels
from wedgemass.coefficients import FLOAT_TABLES
from wedgemass.metric import SAMPLE_POINTS
from wedgemass.oracle import exact_masses


def make_nodes(n, seed=0):
    rng = np.random.default_rng(seed)
    from wedgemass.element import NODE_POSITIONS
    return NODE_POSITIONS + rng.uniform(-0.15, 0.15, size=(n, 6, 3))


def ex_consistent(impl, nodes):
    table, divisor = FLOAT_TABLES[("ex", "consistent")]
    samples = impl.jacobian_dets(nodes, SAMPLE_POINTS["ex"])
    return impl.weighted_sum(samples, table.reshape(7, 36)).reshape(-1, 6, 6) / divisor


def bench(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
    nodes = make_nodes(n)

    # warm-up compiles (or loads the cached) numba kernels
    ex_consistent(_kernels.numba_impl, nodes[:2])

    a = ex_consistent(_kernels.numpy_impl, nodes)
    b = ex_consistent(_kernels.numba_impl, nodes)
    print(f"max |numba - numpy| = {np.abs(a - b).max():.3e}")

    t_np = bench(ex_consistent, _kernels.numpy_impl, nodes)
    t_nb = bench(ex_consistent, _kernels.numba_impl, nodes)
    t_or = bench(exact_masses, nodes, repeat=3)
    print(f"EX consistent, {n} elements")
    print(f"  numpy : {t_np * 1e3:8.2f} ms")
    print(f"  numba : {t_nb * 1e3:8.2f} ms   speedup {t_np / t_nb:.2f}x")
    print(f"  exact oracle (numpy expansion): {t_or * 1e3:8.2f} ms")
