"""Micro-benchmark for the evaluation kernels: numba backend vs numpy fallback.

Run: python3 bench/bench_eval.py --size 20000 --repeats 50
"""
import argparse
import time

import numpy as np

from radialspec import _kernels


def time_loop(func, repeats, *args):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = func(*args)
        t1 = time.perf_counter()
        best = min(best, t1 - t0)
    return best * 1000.0, out


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--size", type=int, default=20000, help="grid points")
    p.add_argument("--terms", type=int, default=6, help="exponential terms")
    p.add_argument("--repeats", type=int, default=50)
    args = p.parse_args()

    rng = np.random.default_rng(0)
    r = np.sort(rng.uniform(0.05, 30.0, args.size))
    rates = -rng.uniform(0.2, 1.5, args.terms) + 1j * rng.standard_normal(args.terms)
    polys = rng.standard_normal((args.terms, 3)) + 1j * rng.standard_normal((args.terms, 3))
    coefs = rng.standard_normal(17) / np.cumprod(np.full(17, 2.0)) + 0j
    rs = r / 40.0

    if _kernels.eval_terms_numba is None:
        print("numba backend unavailable (RSS_NO_NUMBA set or numba missing)")
        return

    # warm up the jit
    _kernels.eval_terms_numba(r[:8], rates, polys)
    _kernels.eval_series_numba(rs[:8], coefs)

    t_np, ref = time_loop(_kernels.eval_terms_numpy, args.repeats, r, rates, polys)
    t_nb, out = time_loop(_kernels.eval_terms_numba, args.repeats, r, rates, polys)
    err = np.max(np.abs(out - ref)) / np.max(1.0 + np.abs(ref))
    print("eval_terms   numpy best ms: {:.3f}".format(t_np))
    print("eval_terms   numba best ms: {:.3f}".format(t_nb))
    print("eval_terms   speedup: {:.2f}x  (max rel diff {:.1e})".format(t_np / t_nb, err))

    t_np, ref = time_loop(_kernels.eval_series_numpy, args.repeats, rs, coefs)
    t_nb, out = time_loop(_kernels.eval_series_numba, args.repeats, rs, coefs)
    err = np.max(np.abs(out - ref)) / np.max(1.0 + np.abs(ref))
    print("eval_series  numpy best ms: {:.3f}".format(t_np))
    print("eval_series  numba best ms: {:.3f}".format(t_nb))
    print("eval_series  speedup: {:.2f}x  (max rel diff {:.1e})".format(t_np / t_nb, err))


if __name__ == "__main__":
    main()
