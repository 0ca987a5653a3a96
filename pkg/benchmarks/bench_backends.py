"""Time the pure-numpy stream loops against the numba-jitted ones.

Runs every algorithm once per backend on the same soft-channel stream and
prints per-algorithm wall times, the speedup, and the largest deviation
between the two error sequences (expected: float accumulation noise).

Usage:
    python benchmarks/bench_backends.py [--samples N] [--length L]
"""

import argparse
import os
import time

import numpy as np

from ckaf import streams
from ckaf.backend import ENV_VAR, numba_available
from ckaf.channel import SOFT_CHANNEL, make_equalization_data
from ckaf.core import SeededRng
from ckaf.kernels import ComplexGaussian, GaussianRBF


def runners(dataset):
    w, t = dataset.windows, dataset.targets
    return [
        ("nclms", lambda: streams.run_linear(w, t, 0.0625)),
        ("naclms", lambda: streams.run_linear(w, t, 0.0625,
                                              widely_linear=True)),
        ("ncklms1", lambda: streams.run_kernel(
            w, t, GaussianRBF(10.0), "complexified-linear", 0.125)[0]),
        ("ncklms2", lambda: streams.run_kernel(
            w, t, ComplexGaussian(10.0), "pure-complex-linear", 0.125)[0]),
        ("nacklms", lambda: streams.run_kernel(
            w, t, ComplexGaussian(10.0), "pure-complex-augmented", 0.125)[0]),
        ("cngd", lambda: streams.run_cngd(w, t, 0.0005, seed=1)),
        ("mlp", lambda: streams.run_mlp(w, t, 0.0003, seed=1)),
    ]


def timed(fn):
    started = time.perf_counter()
    out = fn()
    return np.asarray(out), time.perf_counter() - started


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--samples", type=int, default=3000)
    parser.add_argument("--length", type=int, default=5)
    args = parser.parse_args()

    if not numba_available():
        raise SystemExit("numba is not importable; nothing to compare")

    dataset = make_equalization_data(SOFT_CHANNEL, 0.1, 15.0, args.samples,
                                     args.length, 2, SeededRng(1234))

    # warm up the jit compilation outside the timed region
    os.environ[ENV_VAR] = "numba"
    warm = make_equalization_data(SOFT_CHANNEL, 0.1, 15.0, 50, args.length,
                                  2, SeededRng(1))
    for _, fn in runners(warm):
        fn()

    print(f"{args.samples} samples, window length {args.length}")
    print(f"{'algorithm':<10} {'numpy':>9} {'numba':>9} {'speedup':>8} "
          f"{'max |diff|':>11}")
    for name, fn in runners(dataset):
        os.environ[ENV_VAR] = "numpy"
        ref, t_np = timed(fn)
        os.environ[ENV_VAR] = "numba"
        jit, t_nb = timed(fn)
        diff = float(np.max(np.abs(ref - jit)))
        print(f"{name:<10} {t_np:>8.3f}s {t_nb:>8.3f}s "
              f"{t_np / t_nb:>7.1f}x {diff:>11.2e}")


if __name__ == "__main__":
    main()
