#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Runs each hot kernel on the two sizes that matter in practice: the tiny
arrays the multiplier-norm search hammers (n = 8) and the grid sweeps of
the conjugate/modular machinery (n = 4096).  Usage:

    python benchmarks/bench_kernels.py [--repeat 2000]
"""

import argparse
import importlib
import time

import numpy as np


def load_impls():
    impls = {}
    try:
        impls["c"] = importlib.import_module("kothe._kernels._ckernels")
    except ImportError:
        pass
    impls["python"] = importlib.import_module("kothe._kernels._pykernels")
    return impls


def timeit(fn, repeat):
    fn()  # warmup
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=2000)
    args = parser.parse_args()
    impls = load_impls()

    rng = np.random.default_rng(0)
    small = np.sort(rng.random(8))[::-1].copy()
    big = np.sort(rng.random(4096))[::-1].copy()
    phi_s = np.sqrt(np.arange(1.0, 9.0))
    phi_b = np.sqrt(np.arange(1.0, 4097.0))
    grid = np.concatenate([[0.0], np.geomspace(1e-18, 1.0, 4096)])
    ps = rng.uniform(1.0, 5.0, 4096)

    cases = [
        ("mtilde eval (4096 pts)",
         lambda k: k.orlicz_eval(k.KIND_MTILDE, 0.0, grid)),
        ("mconj eval (4096 pts)",
         lambda k: k.orlicz_eval(k.KIND_MCONJ, 0.0, grid)),
        ("conjugate grid sweep",
         lambda k: k.conj_grid_max(k.KIND_POWER, 2.0, k.KIND_MTILDE, 0.0,
                                   0.7, grid)),
        ("mtilde modular (4096)",
         lambda k: k.modular(k.KIND_MTILDE, 0.0, big, 2.0)),
        ("nakano modular (4096)",
         lambda k: k.nakano_modular(big, 2.0, ps)),
        ("marcinkiewicz sup (n=8)",
         lambda k: k.marcinkiewicz_sup(small, phi_s)),
        ("marcinkiewicz sup (n=4096)",
         lambda k: k.marcinkiewicz_sup(big, phi_b)),
        ("lorentz sum (n=8)",
         lambda k: k.lorentz_sum(small, phi_s)),
        ("weighted lp (n=8)",
         lambda k: k.weighted_lp(small, phi_s, 2.5)),
    ]

    names = list(impls)
    width = max(len(c) for c, _ in cases)
    header = f"{'kernel':<{width}}  " + "  ".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"  {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, call in cases:
        times = [timeit(lambda k=impls[n]: call(k), args.repeat)
                 for n in names]
        row = f"{label:<{width}}  " + "  ".join(
            f"{t * 1e6:>10.2f}us" for t in times)
        if len(times) == 2:
            row += f"  {times[1] / times[0]:>8.1f}x"
        print(row)

    # sanity: both implementations agree on a composite quantity
    if len(names) == 2:
        a = impls[names[0]].conj_grid_max(0, 2.0, 1, 0.0, 0.7, grid)[0]
        b = impls[names[1]].conj_grid_max(0, 2.0, 1, 0.0, 0.7, grid)[0]
        rel = abs(a - b) / max(a, b, 1e-300)
        print(f"\ncross-check conj sweep rel diff: {rel:.2e}")


if __name__ == "__main__":
    main()
