"""Discrete and continuous spectrum of the extensions.

For kappa < 0 the resolvent denominator p(z) has one zero in the sector,
giving a single bound state with energy z_p^6 < 0 and a normalized real
eigenfunction built from three decaying exponentials.  For lambda > 0 the
jump of the resolvent across the continuous spectrum is the rank-one density
P_lambda(r, s) = u(r) u(s) with a real four-exponential eigenfunction u.

The closed forms here were reconciled against the resolvent-difference
identity (the defining property of the density); in particular the fourth
amplitude of the xi=2 eigenfunctions is the conjugate partner of the third,
and the phase branch is e^{i phi} = p(lambda)/|p(lambda)| taken continuously,
not a square root of p/conj(p).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ExponentialSum, ExtensionSpec, RadialFunction
from .errors import DomainError, InternalInconsistency
from .rayleigh import dl_exponential, eval_radial, t3_termwise
from .resolvent import POLE_SCALE, kernel, pole_location

_SQRT2PI = np.sqrt(2.0 * np.pi)
# fixed scan used only to pick the overall sign of an eigenfunction
_SIGN_SCAN = np.linspace(0.25, 6.0, 24)


def _phase(x: float) -> complex:
    return complex(np.exp(1j * np.pi * x))


@dataclass(frozen=True)
class BoundState:
    """The kappa < 0 bound state: pole, energy z_p^6, normalized eigenfunction."""

    z_p: complex
    energy: float
    v: RadialFunction


def bound_state(spec: ExtensionSpec):
    """The bound state of the extension, or None when kappa >= 0 or infinite."""
    if spec.kappa.is_infinite:
        return None
    kappa = spec.kappa.value
    if kappa >= 0:
        return None
    c = POLE_SCALE[(spec.xi, spec.l)]
    z_p = -c * _phase(1 / 6) * kappa
    energy = -((c * kappa) ** 6)
    rates = c * kappa * np.array([1.0, _phase(-1 / 3), _phase(1 / 3)])
    if spec.xi == 1:
        amps = np.array([1.0, _phase(-2 / 3), _phase(2 / 3)])
    else:
        amps = np.array([np.sqrt(3.0), -_phase(-1 / 6), -_phase(1 / 6)])
    if (spec.xi, spec.l) == (1, 1):
        norm = np.sqrt(-3.0 / (2.0 * kappa))
    elif (spec.xi, spec.l) == (1, 2):
        norm = np.sqrt(-8.0 / (27.0 * kappa**3))
    elif (spec.xi, spec.l) == (2, 1):
        norm = np.sqrt(-1.0 / (2.0 * kappa))
    else:
        norm = np.sqrt(-1.0 / (5.0 * 2.0 ** (3.0 / 5.0) * kappa**3))
    v = RadialFunction(ExponentialSum(amps, rates), spec.l, norm)
    return BoundState(z_p, float(energy), v)


def eigen_residual_discrete(b: BoundState, npoints: int = 40) -> float:
    """Max relative residual of T^3 v = energy * v on a log-spaced grid."""
    r = np.geomspace(0.05 / abs(b.z_p), 8.0 / abs(b.z_p), npoints)
    v = eval_radial(b.v, r)
    lhs = eval_radial(t3_termwise(b.v), r)
    return float(np.max(np.abs(lhs - b.energy * v) / (abs(b.energy) * np.abs(v) + 1e-300)))


@dataclass(frozen=True)
class ContinuousEigenfunction:
    """One real eigenfunction of the continuous spectrum at lambda."""

    lam: float
    spec: ExtensionSpec
    phase: float
    u: RadialFunction


def _eigenfunction_terms(spec: ExtensionSpec, lam: float):
    """(prefactor, amplitudes, rates, p) of the closed form, projective in kappa."""
    num, den = spec.kappa.num, spec.kappa.den
    xi, l = spec.xi, spec.l
    if (xi, l) == (1, 1):
        p = 3.0 * lam * den + 2.0 * _phase(1 / 6) * num
        eiphi = p / abs(p)
        amps = [
            1.0 / eiphi,
            -eiphi,
            (2.0 * num / abs(p)) * _phase(1 / 6),
            -(2.0 * num / abs(p)) * _phase(-1 / 6),
        ]
        rates = [1j * lam, -1j * lam, -_phase(-1 / 6) * lam, -_phase(1 / 6) * lam]
        pref = 1j / (_SQRT2PI * lam)
    elif (xi, l) == (1, 2):
        p = 2.0 * lam * den + 3.0 * _phase(1 / 6) * num
        eiphi = p / abs(p)
        amps = [
            _phase(1 / 6) / eiphi,
            -_phase(-1 / 6) * eiphi,
            (2.0 * lam * den / abs(p)) * _phase(-1 / 6),
            -(2.0 * lam * den / abs(p)) * _phase(1 / 6),
        ]
        rates = [1j * lam, -1j * lam, -_phase(1 / 6) * lam, -_phase(-1 / 6) * lam]
        pref = 1j / (_SQRT2PI * lam**2)
    elif (xi, l) == (2, 1):
        p = lam * den + 2.0 * _phase(1 / 6) * num
        eiphi = p / abs(p)
        c3 = -2.0 * (num + _phase(1 / 6) * lam * den) * _phase(1 / 6) / abs(p)
        amps = [1.0 / eiphi, eiphi, c3, np.conj(c3)]
        rates = [1j * lam, -1j * lam, -_phase(-1 / 6) * lam, -_phase(1 / 6) * lam]
        pref = 1.0 / (_SQRT2PI * lam)
    else:
        n5, d5 = num**5, den**5
        p = lam**5 * d5 + 2.0 * _phase(5 / 6) * n5
        if abs(p) <= 1e-13 * (abs(lam**5 * d5) + 2.0 * abs(n5)):
            raise InternalInconsistency("p(lambda) vanished for real kappa")
        eiphi = p / abs(p)
        c3 = -2.0 * (lam**5 * d5 - _phase(1 / 6) * n5) / abs(p)
        amps = [1.0 / eiphi, -eiphi, c3, -np.conj(c3)]
        rates = [1j * lam, -1j * lam, -_phase(-1 / 6) * lam, -_phase(1 / 6) * lam]
        pref = 1j / (_SQRT2PI * lam**2)
    return pref, np.array(amps), np.array(rates), p


def continuous_eigenfunction(spec: ExtensionSpec, lam: float) -> ContinuousEigenfunction:
    """Real continuous-spectrum eigenfunction at lambda > 0, sign-canonicalized."""
    if lam <= 0:
        raise DomainError("lambda must be positive")
    pref, amps, rates, p = _eigenfunction_terms(spec, lam)
    u = RadialFunction(ExponentialSum(amps, rates), spec.l, pref)
    vals = np.real(eval_radial(u, _SIGN_SCAN))
    mags = np.abs(vals)
    idx = int(np.argmax(mags > 0.05 * np.max(mags)))
    if vals[idx] < 0:
        u = u.rescaled(-1.0)
    return ContinuousEigenfunction(float(lam), spec, float(np.angle(p)), u)


def realness_residual(e: ContinuousEigenfunction, npoints: int = 60) -> float:
    r = np.linspace(0.05, 12.0, npoints) / max(e.lam, 1.0)
    vals = eval_radial(e.u, r)
    return float(np.max(np.abs(vals.imag)) / max(np.max(np.abs(vals)), 1e-300))


def eigen_residual_continuous(e: ContinuousEigenfunction, npoints: int = 40) -> float:
    """Max relative residual of T^3 u = lambda^6 u on a log-spaced grid."""
    r = np.geomspace(0.05 / e.lam, 10.0 / e.lam, npoints)
    lhs = eval_radial(t3_termwise(e.u), r)
    rhs = e.lam**6 * eval_radial(e.u, r)
    scale = e.lam**6 * np.abs(eval_radial(e.u, r)) + 1e-300
    return float(np.max(np.abs(lhs - rhs) / scale))


def spectral_density(spec: ExtensionSpec, lam: float, r: float, s: float) -> float:
    """P_lambda(r, s) = u(r) u(s)."""
    u = continuous_eigenfunction(spec, lam).u
    return float(np.real(eval_radial(u, r)) * np.real(eval_radial(u, s)))


def resolvent_difference_density(
    spec: ExtensionSpec, lam: float, r: float, s: float
) -> complex:
    """(6 lam^5 / 2 pi i) (R(r,s; lam) - R(r,s; e^{i pi/3} lam)), the jump across the cut."""
    if lam <= 0:
        raise DomainError("lambda must be positive")
    d = (
        kernel(spec, complex(lam), r, s, allow_boundary=True).total
        - kernel(spec, _phase(1 / 3) * lam, r, s, allow_boundary=True).total
    )
    return 6.0 * lam**5 / (2j * np.pi) * d


def asymptotic_density(l: int, lam: float, r) -> float:
    """Reference free eigenfunction sqrt(2/pi) lam^{-l} D_l sin(lam r)."""
    if lam <= 0:
        raise DomainError("lambda must be positive")
    val = (
        dl_exponential(l, 1j * lam, r) - dl_exponential(l, -1j * lam, r)
    ) / 2j
    return np.sqrt(2.0 / np.pi) * lam ** (-l) * np.real(val)
