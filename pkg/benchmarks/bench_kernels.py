"""Timing comparison of the compiled and pure-Python Riccati kernels.

Run as a script:

    python benchmarks/bench_kernels.py

Times the raw integration sweep on a production-size grid and a complete
ground-state solve at g = 3 with each backend, and reports the speedup.
"""

import time

import numpy as np

from excite_iter import kernels
from excite_iter.groundstate import Grid, solve_groundstate_numeric
from excite_iter.potential import Quartic

N_POINTS = 16001
G = 3.0
X_MAX = 4.0
REPEATS = 5


def time_best(fn, repeats=REPEATS):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_sweep(backend_name):
    sweep = kernels.get_backend(backend_name).riccati_sweep
    h = X_MAX / (N_POINTS - 1)
    e = 2.4826969

    def work():
        sweep(0.0, h, N_POINTS - 1, G, e, 0.0, 0.0)

    return time_best(work)


def bench_solve(backend_name):
    grid = Grid(X_MAX, N_POINTS)

    def work():
        solve_groundstate_numeric(Quartic(G), grid, backend=backend_name)

    return time_best(work)


def main():
    print(f"active backend: {kernels.BACKEND}")
    print(f"grid: n_points={N_POINTS}, x_max={X_MAX}, g={G}, "
          f"best of {REPEATS}")
    backends = ["python"]
    if kernels.BACKEND == "cython":
        backends.insert(0, "cython")

    rows = []
    for name in backends:
        rows.append((name, bench_sweep(name), bench_solve(name)))

    print(f"{'backend':<10}{'sweep [ms]':>12}{'solve [ms]':>12}")
    for name, sweep_t, solve_t in rows:
        print(f"{name:<10}{sweep_t * 1e3:>12.2f}{solve_t * 1e3:>12.2f}")

    if len(rows) == 2:
        print(f"speedup: sweep x{rows[1][1] / rows[0][1]:.1f}, "
              f"solve x{rows[1][2] / rows[0][2]:.1f}")

    # both backends must produce bit-identical results
    if len(rows) == 2:
        h = X_MAX / (N_POINTS - 1)
        out_c = kernels.get_backend("cython").riccati_sweep(
            0.0, h, N_POINTS - 1, G, 2.4826969, 0.0, 0.0)
        out_p = kernels.get_backend("python").riccati_sweep(
            0.0, h, N_POINTS - 1, G, 2.4826969, 0.0, 0.0)
        # entries past a blowup node are NaN in both backends
        same = (np.array_equal(out_c[0], out_p[0], equal_nan=True)
                and np.array_equal(out_c[1], out_p[1], equal_nan=True)
                and out_c[2] == out_p[2])
        print(f"bit-identical outputs: {same}")


if __name__ == "__main__":
    main()
