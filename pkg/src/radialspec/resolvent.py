"""Resolvent kernel of the sixth-order extension in the sector 0 < arg z < pi/3.

For z in the sector, the six solutions of (T_l^3 - z^6) f = 0 split into
three decaying ones g_k = D_l e^{i e^{i pi k/3} z r} and three growing ones
d_k = D_l e^{-i e^{i pi k/3} z r}.  The kernel is assembled from corrected
boundary solutions h_k = d_k + alpha_k g_k + beta_k g_{k+1} + gamma_k g_{k+2}
whose coefficients are rational in (z, kappa) with a common denominator p(z).

The coefficient tables are shipped in closed form (CLOSED_TABLE) and checked
against an independent linear-system oracle; where the two disagreed the
oracle won, and the superseded printed entries are kept in
PRINTED_TABLE_ERRATA for the record.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import condition_rows
from .core import ExponentialSum, ExtensionSpec, RadialFunction
from .errors import (
    DomainError,
    InternalInconsistency,
    InvalidInput,
    PoleError,
    SectorError,
)
from .quadrature import panel_rule
from .rayleigh import derivative, dl_exponential, eval_radial


def _phase(x: float) -> complex:
    return complex(np.exp(1j * np.pi * x))


# Power of z and kappa in the coefficient numerators and denominator p.
KAPPA_POWER = {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 5}

# p(z) = az * z^pw + ak * kappa^pw, keyed by (xi, l).
P_TERMS = {
    (1, 1): (3.0, 2.0 * _phase(1 / 6)),
    (1, 2): (2.0, 3.0 * _phase(1 / 6)),
    (2, 1): (1.0, 2.0 * _phase(1 / 6)),
    (2, 2): (1.0, 2.0 * _phase(5 / 6)),
}

# Bound-state pole z_p = -c * e^{i pi/6} * kappa exists for kappa < 0.
POLE_SCALE = {(1, 1): 2.0 / 3.0, (1, 2): 3.0 / 2.0, (2, 1): 2.0, (2, 2): 2.0**0.2}

# Numerators (az, ak) with coefficient = (az z^pw + ak kappa^pw) / p,
# listed per k as (alpha, beta, gamma).
CLOSED_TABLE = {
    (1, 1): (
        ((-3.0, 2.0 * _phase(5 / 6)), (0.0, 2.0 * _phase(-5 / 6)), (0.0, 2.0 * _phase(-1 / 6))),
        ((-3.0, 0.0), (0.0, 2.0 * _phase(5 / 6)), (0.0, -2.0j)),
        ((-3.0, -2.0j), (0.0, 2.0j), (0.0, 2.0 * _phase(-5 / 6))),
    ),
    (1, 2): (
        ((2.0 * _phase(-2 / 3), 3.0 * _phase(7 / 6)), (2.0 * _phase(1 / 3), 0.0), (-2.0, 0.0)),
        ((0.0, 3.0 * _phase(7 / 6)), (2.0 * _phase(2 / 3), 0.0), (2.0 * _phase(-2 / 3), 0.0)),
        ((2.0 * _phase(2 / 3), 3.0 * _phase(7 / 6)), (-2.0, 0.0), (2.0 * _phase(-1 / 3), 0.0)),
    ),
    (2, 1): (
        ((1.0, 2.0 * _phase(-1 / 6)), (2.0 * _phase(-2 / 3), 2.0 * _phase(-5 / 6)), (2.0 * _phase(2 / 3), 2.0 * _phase(5 / 6))),
        ((-3.0, 0.0), (2.0 * _phase(1 / 3), 2.0 * _phase(5 / 6)), (2.0 * _phase(-1 / 3), -2.0j)),
        ((1.0, 2.0j), (2.0 * _phase(-2 / 3), -2.0j), (2.0 * _phase(2 / 3), 2.0 * _phase(-5 / 6))),
    ),
    (2, 2): (
        ((-1.0, 2.0 * _phase(1 / 6)), (2.0, 2.0 * _phase(-5 / 6)), (-2.0, 2.0 * _phase(-1 / 6))),
        ((3.0, 0.0), (-2.0, -2.0j), (-2.0, 2.0 * _phase(1 / 6))),
        ((-1.0, -2.0j), (-2.0, 2.0 * _phase(-1 / 6)), (2.0, 2.0j)),
    ),
}

# Printed entries superseded by the linear-system oracle (kept for the record;
# values are the printed (az, ak) numerator pairs over the same p).
PRINTED_TABLE_ERRATA = {
    ((1, 1), 2, "alpha"): (-3.0, -2.0 * _phase(5 / 6)),
    ((1, 2), 0, "alpha"): (-3.0 * _phase(1 / 3), 3.0 * _phase(7 / 6)),
    ((1, 2), 2, "alpha"): (2.0 * _phase(1 / 3), 3.0 * _phase(7 / 6)),
    ((2, 1), 0, "alpha"): (1.0, -2.0 * _phase(-1 / 6)),
    ((2, 1), 1, "beta"): (2.0 * _phase(1 / 3), 2.0 * _phase(-1 / 6)),
}

# Test-harness hook: when set to ((xi, l), k, name) the closed-form
# coefficient's sign is flipped, so the oracle-equivalence suite must fire.
_COEFF_INJECTION = None


def set_coefficient_injection(entry):
    global _COEFF_INJECTION
    _COEFF_INJECTION = entry


def validate_sector(z: complex, allow_boundary: bool = False) -> complex:
    """Check 0 < arg z < pi/3 (closed sector with allow_boundary)."""
    z = complex(z)
    if z == 0:
        raise SectorError("z must be nonzero")
    arg = np.angle(z)
    lo, hi = 0.0, np.pi / 3.0
    pad = 1e-12 if allow_boundary else -1e-15
    if not (lo - pad < arg < hi + pad):
        raise SectorError(f"arg z = {arg:.6f} outside the sector (0, pi/3)")
    return z


def g_rate(z: complex, k: int) -> complex:
    return 1j * _phase(k / 3) * z


def basis_g(l: int, z: complex, k: int, allow_boundary: bool = False) -> RadialFunction:
    """Decaying solution g_k of (T_l - e^{2 pi i k/3} z^2) f = 0."""
    validate_sector(z, allow_boundary)
    if k not in (0, 1, 2):
        raise InvalidInput("k must be 0, 1 or 2")
    return RadialFunction(ExponentialSum([1.0], [g_rate(z, k)]), l)


def basis_d(l: int, z: complex, k: int, allow_boundary: bool = False) -> RadialFunction:
    """Growing partner d_k of g_k (same second-order equation)."""
    validate_sector(z, allow_boundary)
    if k not in (0, 1, 2):
        raise InvalidInput("k must be 0, 1 or 2")
    return RadialFunction(ExponentialSum([1.0], [-g_rate(z, k)]), l)


def wronskian(l: int, z: complex, k: int) -> complex:
    """Closed-form W_k = d_k' g_k - d_k g_k' (r-independent)."""
    if k not in (0, 1, 2):
        raise InvalidInput("k must be 0, 1 or 2")
    if l == 1:
        return (-2j * z**3, 2j * z**3, -2j * z**3)[k]
    if l == 2:
        return (-2j * z**5, 2j * _phase(2 / 3) * z**5, 2j * _phase(1 / 3) * z**5)[k]
    raise InvalidInput(f"l={l} not supported")


def wronskian_numeric(l: int, z: complex, k: int, r: float) -> complex:
    g = basis_g(l, z, k, allow_boundary=True)
    d = basis_d(l, z, k, allow_boundary=True)
    return derivative(d, r, 1) * eval_radial(g, r) - eval_radial(d, r) * derivative(
        g, r, 1
    )


@dataclass(frozen=True)
class CoefficientSet:
    """alpha_k, beta_k, gamma_k (k = 0..2) over the common denominator p."""

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    p: complex


def _denominator(spec: ExtensionSpec, z: complex):
    """(p, magnitude scale) with the projective kappa folded in."""
    pw = KAPPA_POWER[(spec.xi, spec.l)]
    az, ak = P_TERMS[(spec.xi, spec.l)]
    num, den = spec.kappa.num, spec.kappa.den
    t1 = az * z**pw * den**pw
    t2 = ak * num**pw
    return t1 + t2, abs(t1) + abs(t2)


def pole_location(spec: ExtensionSpec):
    """The denominator zero z_p inside the sector, or None (exists iff kappa < 0)."""
    if spec.kappa.is_infinite or spec.kappa.value >= 0:
        return None
    return -POLE_SCALE[(spec.xi, spec.l)] * _phase(1 / 6) * spec.kappa.value


def _checked_denominator(spec: ExtensionSpec, z: complex):
    p, scale = _denominator(spec, z)
    if abs(p) <= 1e-12 * scale:
        raise PoleError(
            f"z = {z} is at the resolvent pole of {spec}", pole=pole_location(spec)
        )
    return p


def coefficients_closed_form(
    spec: ExtensionSpec, z: complex, allow_boundary: bool = False
) -> CoefficientSet:
    """The (corrected) coefficient tables evaluated at z."""
    validate_sector(z, allow_boundary)
    p = _checked_denominator(spec, z)
    pw = KAPPA_POWER[(spec.xi, spec.l)]
    num, den = spec.kappa.num, spec.kappa.den
    zp, kp = z**pw * den**pw, complex(num**pw)
    out = {"alpha": np.empty(3, complex), "beta": np.empty(3, complex), "gamma": np.empty(3, complex)}
    for k in range(3):
        for name, (az, ak) in zip(("alpha", "beta", "gamma"), CLOSED_TABLE[(spec.xi, spec.l)][k]):
            val = (az * zp + ak * kp) / p
            if _COEFF_INJECTION == ((spec.xi, spec.l), k, name):
                val = -val
            out[name][k] = val
    return CoefficientSet(out["alpha"], out["beta"], out["gamma"], p)


def coefficients_oracle(
    spec: ExtensionSpec, z: complex, allow_boundary: bool = False
) -> CoefficientSet:
    """Independent 3x3 linear solve of the boundary conditions for each h_k."""
    validate_sector(z, allow_boundary)
    p = _checked_denominator(spec, z)
    alpha, beta, gamma = np.empty(3, complex), np.empty(3, complex), np.empty(3, complex)
    for k in range(3):
        chis = np.array(
            [-g_rate(z, k), g_rate(z, k), g_rate(z, (k + 1) % 3), g_rate(z, (k + 2) % 3)]
        )
        rows = condition_rows(spec, chis)
        a = np.array([row[1:] for row in rows])
        b = -np.array([row[0] for row in rows])
        if abs(np.linalg.det(a)) <= 1e-13 * np.prod(np.linalg.norm(a, axis=1)):
            raise InternalInconsistency("singular boundary system at generic z")
        alpha[k], beta[k], gamma[k] = np.linalg.solve(a, b)
    return CoefficientSet(alpha, beta, gamma, p)


def h_solution(
    spec: ExtensionSpec, z: complex, k: int, allow_boundary: bool = False
) -> RadialFunction:
    """h_k = d_k + alpha_k g_k + beta_k g_{k+1} + gamma_k g_{k+2}."""
    c = coefficients_closed_form(spec, z, allow_boundary)
    amps = [1.0, c.alpha[k], c.beta[k], c.gamma[k]]
    rates = [-g_rate(z, k), g_rate(z, k), g_rate(z, (k + 1) % 3), g_rate(z, (k + 2) % 3)]
    return RadialFunction(ExponentialSum(amps, rates), spec.l)


@dataclass(frozen=True)
class KernelValue:
    """Resolvent kernel value with its growing/decaying split."""

    total: complex
    R0: complex
    R1: complex
    R2: complex
    Rg: complex


def kernel(
    spec: ExtensionSpec, z: complex, r: float, s: float, allow_boundary: bool = False
) -> KernelValue:
    """R(r, s; z), symmetric in (r, s); parts R0..R2 carry the growing d_k terms."""
    if r <= 0 or s <= 0:
        raise DomainError("kernel requires r, s > 0")
    validate_sector(z, allow_boundary)
    c = coefficients_closed_form(spec, z, allow_boundary)
    lo, hi = (r, s) if r <= s else (s, r)
    parts = []
    rg = 0.0 + 0.0j
    for k in range(3):
        ck = _phase(2 * k / 3) / (3.0 * z**4 * wronskian(spec.l, z, k))
        g_lo = [dl_exponential(spec.l, g_rate(z, (k + m) % 3), lo) for m in range(3)]
        g_hi = dl_exponential(spec.l, g_rate(z, k), hi)
        d_lo = dl_exponential(spec.l, -g_rate(z, k), lo)
        parts.append(ck * d_lo * g_hi)
        rg += ck * (c.alpha[k] * g_lo[0] + c.beta[k] * g_lo[1] + c.gamma[k] * g_lo[2]) * g_hi
    total = parts[0] + parts[1] + parts[2] + rg
    return KernelValue(total, parts[0], parts[1], parts[2], rg)


def apply_resolvent(
    spec: ExtensionSpec,
    z: complex,
    f,
    r,
    r_max: float = None,
    points_per_unit: int = 8,
    allow_boundary: bool = False,
):
    """u(r) = integral of R(r, s; z) f(s) ds for a callable f, vectorized in r.

    The kernel's min/max structure is used directly: for each k the integral
    splits at s = r into an h_k-weighted inner part and a g_k-weighted tail.
    """
    validate_sector(z, allow_boundary)
    scalar = np.isscalar(r)
    rr = np.atleast_1d(np.asarray(r, np.float64))
    if np.any(rr <= 0):
        raise DomainError("apply_resolvent requires r > 0")
    if r_max is None:
        decay = min(-np.real(1j * _phase(k / 3) * z) for k in range(3))
        r_max = 40.0 / decay
    out = np.zeros(rr.shape, np.complex128)
    for k in range(3):
        ck = _phase(2 * k / 3) / (3.0 * z**4 * wronskian(spec.l, z, k))
        gk = basis_g(spec.l, z, k, allow_boundary)
        hk = h_solution(spec, z, k, allow_boundary)
        for i, ri in enumerate(rr):
            n_in = max(8, int(np.ceil(ri * points_per_unit)))
            x1, w1 = panel_rule(0.0, ri, n_in)
            inner = np.sum(w1 * eval_radial(hk, x1) * f(x1))
            n_out = max(8, int(np.ceil((r_max - ri) * points_per_unit)))
            x2, w2 = panel_rule(ri, r_max, n_out)
            tail = np.sum(w2 * eval_radial(gk, x2) * f(x2))
            out[i] += ck * (
                eval_radial(gk, np.array([ri]))[0] * inner
                + eval_radial(hk, np.array([ri]))[0] * tail
            )
    return out[0] if scalar else out


def cross_relation_residuals(spec: ExtensionSpec, z: complex) -> np.ndarray:
    """The three beta/gamma/Wronskian identities; all should vanish."""
    c = coefficients_closed_form(spec, z)
    w = [wronskian(spec.l, z, k) for k in range(3)]
    pairs = [
        (c.beta[0] / w[0], _phase(2 / 3) * c.gamma[1] / w[1]),
        (c.gamma[0] / w[0], _phase(4 / 3) * c.beta[2] / w[2]),
        (_phase(2 / 3) * c.beta[1] / w[1], _phase(4 / 3) * c.gamma[2] / w[2]),
    ]
    return np.array(
        [abs(a - b) / max(abs(a), abs(b), 1e-300) for a, b in pairs], np.float64
    )
