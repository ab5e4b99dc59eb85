"""Time the compiled and numpy kernels on the same workloads.

    python benchmarks/bench_kernels.py --n 200000 --repeat 5
"""
import argparse
import math
import time

import numpy as np

from wwdipole._backend import available


def workload(n, seed=0):
    rng = np.random.default_rng(seed)
    z0, omega = 0.01, 1.0
    r = 200 * 2 * math.pi * rng.uniform(0.5, 1.5, n)
    ct = rng.uniform(-1, 1, n)
    st = np.sqrt(1 - ct * ct)
    xyz = r[:, None] * np.stack([st, np.zeros(n), ct], axis=1)
    t = rng.uniform(0, 2 * math.pi, n)
    return (xyz[:, 0].copy(), xyz[:, 1].copy(), xyz[:, 2].copy(), t), z0, omega


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100_000, help="samples per call")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    (x, y, z, t), z0, omega = workload(args.n)
    kernels = available()
    rows = []
    for name, k in sorted(kernels.items()):
        solve = best_of(lambda: k.solve_delay(x, y, z, t, z0, omega, 1.0, 1e-12), args.repeat)
        fields = best_of(lambda: k.lw_fields(x, y, z, t, 1.0, z0, omega, 1.0, 1e-12), args.repeat)
        rows.append((name, solve, fields))

    print(f"{args.n} samples, best of {args.repeat}")
    print(f"{'backend':<8} {'solve_delay':>14} {'lw_fields':>14} {'ns/sample':>10}")
    for name, solve, fields in rows:
        print(f"{name:<8} {solve * 1e3:>11.2f} ms {fields * 1e3:>11.2f} ms {fields / args.n * 1e9:>10.1f}")
    if "cython" in kernels and "python" in kernels:
        by = {name: f for name, _, f in rows}
        print(f"speedup (lw_fields): {by['python'] / by['cython']:.1f}x")


if __name__ == "__main__":
    main()
