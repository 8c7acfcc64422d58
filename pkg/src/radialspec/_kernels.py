"""Hot evaluation loops: numba-compiled with a pure-numpy fallback.

The active backend is chosen at import time: set ``RSS_NO_NUMBA=1`` to force
the numpy path (useful for debugging and as the reference in benchmarks).
Both backends are exported so ``bench/bench_eval.py`` can compare them.
"""

import os

import numpy as np

_DISABLED = os.environ.get("RSS_NO_NUMBA", "").lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _eval_terms_loop(r, rates, polys):
    # sum_k (sum_j polys[k, j] / r**j) * exp(rates[k] * r), elementwise in r
    n = r.shape[0]
    nterm, npow = polys.shape
    out = np.zeros(n, np.complex128)
    for i in range(n):
        inv = 1.0 / r[i]
        acc = 0.0 + 0.0j
        for k in range(nterm):
            q = polys[k, npow - 1]
            for j in range(npow - 2, -1, -1):
                q = q * inv + polys[k, j]
            acc += q * np.exp(rates[k] * r[i])
        out[i] = acc
    return out


def _eval_series_loop(r, coefs):
    # Horner evaluation of sum_m coefs[m] * r**m
    n = r.shape[0]
    m = coefs.shape[0]
    out = np.empty(n, np.complex128)
    for i in range(n):
        acc = coefs[m - 1]
        for j in range(m - 2, -1, -1):
            acc = acc * r[i] + coefs[j]
        out[i] = acc
    return out


def eval_terms_numpy(r, rates, polys):
    inv = 1.0 / r[:, None]
    npow = polys.shape[1]
    q = np.broadcast_to(polys[:, npow - 1], (r.shape[0], polys.shape[0])).copy()
    for j in range(npow - 2, -1, -1):
        q = q * inv + polys[:, j]
    return np.sum(q * np.exp(np.outer(r, rates)), axis=1)


def eval_series_numpy(r, coefs):
    acc = np.full(r.shape, coefs[-1], np.complex128)
    for j in range(coefs.shape[0] - 2, -1, -1):
        acc = acc * r + coefs[j]
    return acc


if HAVE_NUMBA:
    eval_terms_numba = njit(cache=True)(_eval_terms_loop)
    eval_series_numba = njit(cache=True)(_eval_series_loop)
    eval_terms = eval_terms_numba
    eval_series = eval_series_numba
else:
    eval_terms_numba = None
    eval_series_numba = None
    eval_terms = eval_terms_numpy
    eval_series = eval_series_numpy
