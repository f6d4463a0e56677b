"""Time the compiled and numpy grid kernels on the same random grid.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]
"""
import argparse
import time

import numpy as np

from ghzboost import _pykernels

try:
    from ghzboost import _ckernels
except ImportError:
    _ckernels = None


def random_grid(n, seed=7):
    rng = np.random.default_rng(seed)
    return (
        rng.uniform(0, 5, (n, 3)),
        rng.uniform(0, np.pi, (n, 3)),
        rng.uniform(-np.pi, np.pi, (n, 3)),
        rng.uniform(0, 5, n),
    )


def best_time(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=200_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    grid = random_grid(args.points)
    backends = {"python": _pykernels.evaluate_grid}
    if _ckernels is not None:
        backends["cython"] = _ckernels.evaluate_grid
    else:
        print("compiled extension not built; timing numpy backend only")

    results = {name: fn(*grid) for name, fn in backends.items()}
    if len(results) == 2:
        diff = max(float(np.max(np.abs(results["cython"][k] - results["python"][k]))) for k in results["python"])
        print(f"max backend difference: {diff:.2e}")

    timings = {}
    for name, fn in backends.items():
        timings[name] = best_time(fn, grid, args.repeat)
        rate = args.points / timings[name]
        print(f"{name:>7}: {timings[name] * 1e3:9.2f} ms  ({rate:,.0f} points/s)")
    if len(timings) == 2:
        print(f"speedup: {timings['python'] / timings['cython']:.1f}x")


if __name__ == "__main__":
    main()
