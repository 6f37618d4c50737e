"""Time the compiled and numpy Bloch-series kernels on the same workload.

    python3 benchmarks/bench_kernels.py --alpha 7 --steps 5000 --repeat 5
"""

import argparse
import time

import numpy as np

from jcpurity._backend import BACKEND, available_backends
from jcpurity.dynamics import ModelParams, bloch_series, poisson_weights
from jcpurity.scan import TimeGrid


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--model", choices=("jc", "ajc"), default="jc")
    ap.add_argument("--alpha", type=float, default=7.0)
    ap.add_argument("--beta", type=float, default=0.0)
    ap.add_argument("--tau-max", type=float, default=50.0)
    ap.add_argument("--steps", type=int, default=5000)
    ap.add_argument("--threads", type=int, nargs="+", default=[1])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    params = ModelParams(args.model, args.alpha, args.beta)
    trunc = poisson_weights(args.alpha)[1]
    taus = TimeGrid(args.tau_max, args.steps).points()
    kernels = available_backends()
    print(f"default backend: {BACKEND}; n_max={trunc.n_max}, {taus.size} time points, "
          f"best of {args.repeat}")

    ref = bloch_series(params, taus, trunc, kernel=kernels["numpy"])
    base = None
    for name, kernel in sorted(kernels.items(), key=lambda kv: kv[0] != "numpy"):
        for threads in args.threads:
            out = bloch_series(params, taus, trunc, threads, kernel=kernel)
            dev = float(np.max(np.abs(out - ref)))
            t = best_of(lambda: bloch_series(params, taus, trunc, threads, kernel=kernel),
                        args.repeat)
            base = base or t
            print(f"{name:>7} threads={threads:<3} {1e3 * t:9.2f} ms  "
                  f"speedup x{base / t:6.2f}  max dev {dev:.1e}")


if __name__ == "__main__":
    main()
