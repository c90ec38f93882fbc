"""Time the numba and numpy paths of the hot kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--n 2000] [--d 50] [--repeat 3]

Prints one line per (kernel, backend) with the best wall time, and checks that
both backends agree.
"""
import argparse
import time

import numpy as np

from ejop._accel import HAVE_NUMBA, set_backend
from ejop.data import EstimatorParams, validate_dataset
from ejop.jacobian import GradientGateConfig, estimate_ejop
from ejop.kernels import sq_distances


def best_of(fn, repeat):
    fn()  # warm-up, includes jit compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--d", type=int, default=50)
    ap.add_argument("--c", type=int, default=5)
    ap.add_argument("--eval-points", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    X = rng.uniform(0, 1, (args.n, args.d))
    ds = validate_dataset(X, rng.integers(0, args.c, args.n))
    params = EstimatorParams(h=0.4 * np.sqrt(args.d), t=0.1)
    gate = GradientGateConfig.for_dataset(ds, enabled=False)
    ids = np.arange(args.eval_points)

    cases = {
        "sq_distances": lambda: sq_distances(X[:500], X),
        "estimate_ejop": lambda: estimate_ejop(ds, params, gate, ids, workers=1).g,
    }
    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    print(f"n={args.n} d={args.d} c={args.c} eval_points={args.eval_points}")
    for name, fn in cases.items():
        results = {}
        for b in backends:
            prev = set_backend(b)
            try:
                results[b] = best_of(fn, args.repeat)
            finally:
                set_backend(prev)
            print(f"{name:<15}{b:<7}{results[b][0] * 1e3:>10.1f} ms")
        if len(results) == 2:
            speedup = results["numpy"][0] / results["numba"][0]
            agree = np.allclose(results["numpy"][1], results["numba"][1], rtol=1e-10, atol=1e-12)
            print(f"{name:<15}speedup x{speedup:.2f}, outputs agree: {agree}")


if __name__ == "__main__":
    main()
