import numpy as np
import pytest

from radialspec import (
    DomainError,
    bound_state,
    check_membership,
    continuous_eigenfunction,
    eval_radial,
    jet_at_origin,
    make_extension_spec,
    spectral_density,
)
from radialspec.quadrature import quad_semiaxis
from radialspec.spectrum import (
    asymptotic_density,
    eigen_residual_continuous,
    eigen_residual_discrete,
    realness_residual,
    resolvent_difference_density,
)

ALL_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))


def _phase(x):
    return np.exp(1j * np.pi * x)


def test_bound_state_anchor_11():
    b = bound_state(make_extension_spec(1, 1, -1.0))
    assert abs(b.z_p - (2.0 / 3.0) * _phase(1 / 6)) < 1e-14
    assert abs(b.energy + (2.0 / 3.0) ** 6) < 1e-14


def test_bound_state_anchor_22():
    b = bound_state(make_extension_spec(2, 2, -1.0))
    assert abs(b.z_p - 2.0**0.2 * _phase(1 / 6)) < 1e-14
    assert abs(b.energy + 2.0 ** (6.0 / 5.0)) < 1e-12


def test_no_bound_state_for_nonnegative_kappa():
    assert bound_state(make_extension_spec(1, 1, 0.0)) is None
    assert bound_state(make_extension_spec(1, 2, 2.0)) is None
    assert bound_state(make_extension_spec(2, 1, "inf")) is None


@pytest.mark.parametrize("l,xi", ALL_PAIRS)
@pytest.mark.parametrize("kappa", [-1.0, -0.4, -2.3])
def test_bound_state_normalized(l, xi, kappa):
    b = bound_state(make_extension_spec(l, xi, kappa))
    decay = 0.7 * abs(np.real(b.v.base.rates[0]))
    norm2 = quad_semiaxis(lambda r: np.abs(eval_radial(b.v, r)) ** 2, decay)
    assert abs(norm2 - 1.0) < 1e-8


@pytest.mark.parametrize("l,xi", ALL_PAIRS)
def test_bound_state_eigen_and_membership(l, xi):
    spec = make_extension_spec(l, xi, -1.0)
    b = bound_state(spec)
    assert eigen_residual_discrete(b) < 1e-10
    ok, _ = check_membership(spec, jet_at_origin(b.v))
    assert ok


@pytest.mark.parametrize("l,xi", ALL_PAIRS)
@pytest.mark.parametrize("kappa", [0.8, -1.3, 0.0])
@pytest.mark.parametrize("lam", [0.3, 1.1, 3.3])
def test_continuous_real_eigen_membership(l, xi, kappa, lam):
    spec = make_extension_spec(l, xi, kappa)
    e = continuous_eigenfunction(spec, lam)
    assert realness_residual(e) < 1e-12
    assert eigen_residual_continuous(e) < 1e-10
    ok, _ = check_membership(spec, jet_at_origin(e.u))
    assert ok


def test_continuous_rejects_nonpositive_lambda():
    spec = make_extension_spec(1, 1, 0.0)
    with pytest.raises(DomainError):
        continuous_eigenfunction(spec, 0.0)
    with pytest.raises(DomainError):
        continuous_eigenfunction(spec, -1.0)


def test_continuous_kappa_zero_matches_free_form():
    # kappa = 0 in the first family reduces to the free eigenfunction for l=1
    spec = make_extension_spec(1, 1, 0.0)
    lam = 1.7
    u = continuous_eigenfunction(spec, lam).u
    r = np.linspace(0.2, 8.0, 40)
    got = np.real(eval_radial(u, r))
    ref = np.array([asymptotic_density(1, lam, ri) for ri in r])
    err = min(np.max(np.abs(got - ref)), np.max(np.abs(got + ref)))
    assert err < 1e-12


def test_sign_canonicalization():
    for l, xi in ALL_PAIRS:
        e = continuous_eigenfunction(make_extension_spec(l, xi, 0.9), 1.3)
        scan = np.linspace(0.25, 6.0, 24)
        vals = np.real(eval_radial(e.u, scan))
        mags = np.abs(vals)
        idx = int(np.argmax(mags > 0.05 * np.max(mags)))
        assert vals[idx] > 0


@pytest.mark.parametrize("l,xi", ALL_PAIRS)
@pytest.mark.parametrize("kappa", [0.8, -1.3])
def test_density_matches_resolvent_jump(l, xi, kappa):
    spec = make_extension_spec(l, xi, kappa)
    lam, r, s = 1.1, 0.9, 2.4
    direct = spectral_density(spec, lam, r, s)
    jump = resolvent_difference_density(spec, lam, r, s)
    assert abs(jump.imag) < 1e-8 * (1.0 + abs(jump))
    assert abs(direct - jump.real) < 1e-8 * (1.0 + abs(direct))


def test_density_diagonal_nonnegative():
    spec = make_extension_spec(2, 1, -0.5)
    for lam in (0.4, 1.0, 2.7):
        for r in (0.5, 1.5, 3.0):
            assert spectral_density(spec, lam, r, r) >= 0.0


def test_density_symmetric():
    spec = make_extension_spec(1, 2, 0.6)
    a = spectral_density(spec, 0.9, 0.7, 2.1)
    b = spectral_density(spec, 0.9, 2.1, 0.7)
    assert a == b


def test_asymptotic_density_values():
    # for l=1 the free form evaluates to sqrt(2/pi) (cos(x) - sin(x)/x), x = lam r
    lam, r = 2.0, 1.5
    x = lam * r
    ref = np.sqrt(2.0 / np.pi) * (np.cos(x) - np.sin(x) / x)
    assert abs(asymptotic_density(1, lam, r) - ref) < 1e-13
    with pytest.raises(DomainError):
        asymptotic_density(1, 0.0, 1.0)


def test_common_extension_two_descriptions_agree():
    # (l=2, xi=1, kappa=0) and (l=2, xi=2, kappa=inf) describe one extension
    lam = 1.3
    u1 = continuous_eigenfunction(make_extension_spec(2, 1, 0.0), lam).u
    u2 = continuous_eigenfunction(make_extension_spec(2, 2, "inf"), lam).u
    r = np.linspace(0.3, 7.0, 30)
    a, b = np.real(eval_radial(u1, r)), np.real(eval_radial(u2, r))
    assert min(np.max(np.abs(a - b)), np.max(np.abs(a + b))) < 1e-10
