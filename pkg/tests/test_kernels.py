import subprocess
import sys

import numpy as np

from radialspec import _kernels


def _sample_inputs(seed=0):
    rng = np.random.default_rng(seed)
    r = rng.uniform(0.1, 8.0, 200)
    rates = rng.standard_normal(4) - 1.0 + 1j * rng.standard_normal(4)
    polys = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
    coefs = rng.standard_normal(17) + 1j * rng.standard_normal(17)
    return r, rates, polys, coefs


def test_backends_agree_on_terms():
    r, rates, polys, _ = _sample_inputs()
    ref = _kernels.eval_terms_numpy(r, rates, polys)
    got = _kernels.eval_terms(r, rates, polys)
    assert np.max(np.abs(got - ref)) < 1e-12 * np.max(1.0 + np.abs(ref))


def test_backends_agree_on_series():
    r, _, _, coefs = _sample_inputs(1)
    r = r / 8.0
    ref = _kernels.eval_series_numpy(r, coefs)
    got = _kernels.eval_series(r, coefs)
    assert np.max(np.abs(got - ref)) < 1e-13 * np.max(1.0 + np.abs(ref))


def test_terms_linearity():
    r, rates, polys, _ = _sample_inputs(2)
    doubled = _kernels.eval_terms(r, rates, 2.0 * polys)
    single = _kernels.eval_terms(r, rates, polys)
    assert np.max(np.abs(doubled - 2.0 * single)) < 1e-12 * np.max(1.0 + np.abs(single))


def test_numpy_fallback_import():
    # the env switch must select the numpy path without breaking the API
    code = (
        "import os; os.environ['RSS_NO_NUMBA'] = '1';"
        "from radialspec import _kernels;"
        "assert not _kernels.HAVE_NUMBA;"
        "assert _kernels.eval_terms is _kernels.eval_terms_numpy;"
        "import numpy as np;"
        "r = np.linspace(0.5, 2.0, 5);"
        "out = _kernels.eval_terms(r, np.array([-1.0 + 0j]), np.array([[1.0 + 0j, 0j]]));"
        "assert np.allclose(out, np.exp(-r))"
    )
    subprocess.run([sys.executable, "-c", code], check=True)
