"""The Rayleigh-type operator D_l on exponential sums.

D_l w = r^{l+1} (1/r d/dr)^l (w/r).  On an exponential e^{chi r} it acts as
multiplication by a polynomial in 1/r; on a monomial r^k it acts as
multiplication by (k-2l+1)(k-2l+3)...(k-1) and a shift r^k -> r^{k-l}.
The key identity (checked by verify_rayleigh) is

    T_l D_l w = -D_l w'',   T_l = -d^2/dr^2 + l(l+1)/r^2,

so the sixth-order operator T_l^3 acts termwise on D_l e^{chi r} as
multiplication by -chi^6.

Evaluation is cancellation-safe: below r_switch the closed form loses digits
to the near-cancelling 1/r poles, so regular functions switch to an origin
Taylor series there.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from . import _kernels
from .core import ExponentialSum, Jet6, RadialFunction, VALID_L
from .errors import DomainError, InvalidSpec, SingularityError, Unsupported

SERIES_ORDER = 16
MAX_SERIES_ORDER = 24


def monomial_coefficient(l: int, k: int) -> float:
    """Factor in D_l r^k = (k-2l+1)(k-2l+3)...(k-1) r^{k-l}."""
    if l not in VALID_L:
        raise InvalidSpec(f"l={l} not supported")
    if k < 0:
        raise DomainError("monomial power must be nonnegative")
    out = 1.0
    for i in range(l):
        out *= k - 1 - 2 * i
    return out


def exponential_poly(l: int, chi: complex) -> np.ndarray:
    """Coefficients p_j with D_l e^{chi r} = (sum_j p_j r^{-j}) e^{chi r}."""
    if l == 1:
        return np.array([chi, -1.0], np.complex128)
    if l == 2:
        return np.array([chi * chi, -3.0 * chi, 3.0], np.complex128)
    raise InvalidSpec(f"l={l} not supported")


def dl_exponential(l: int, chi: complex, r) -> complex:
    """D_l e^{chi r} at r > 0 via the closed form."""
    r = np.asarray(r, np.float64)
    if np.any(r <= 0.0):
        raise DomainError("dl_exponential requires r > 0")
    p = exponential_poly(l, chi)
    inv = 1.0 / r
    q = np.full_like(r, p[-1], dtype=np.complex128)
    for j in range(len(p) - 2, -1, -1):
        q = q * inv + p[j]
    out = q * np.exp(chi * r)
    return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class OriginSeries:
    """Taylor coefficients of a D_l image around r = 0, powers 0..truncation_order."""

    coefficients: np.ndarray
    truncation_order: int

    def eval(self, r):
        r = np.asarray(r, np.float64)
        out = _kernels.eval_series(np.atleast_1d(r).ravel(), self.coefficients)
        out = out.reshape(np.atleast_1d(r).shape)
        return complex(out[0]) if r.ndim == 0 else out


def _require_regular(f: RadialFunction, what: str):
    if not f.regular_at_origin:
        raise SingularityError(f"{what} requires a base regular at the origin")


def origin_series(f: RadialFunction, order: int = SERIES_ORDER) -> OriginSeries:
    """Taylor expansion of f around r = 0; only defined for regular bases."""
    _require_regular(f, "origin_series")
    if not 0 <= order <= MAX_SERIES_ORDER:
        raise Unsupported(f"series order must be in 0..{MAX_SERIES_ORDER}")
    a = f.scale * f.base.amplitudes
    chi = f.base.rates
    coefs = np.empty(order + 1, np.complex128)
    for j in range(order + 1):
        m = j + f.l
        coefs[j] = monomial_coefficient(f.l, m) / factorial(m) * np.sum(a * chi**m)
    return OriginSeries(coefs, order)


def jet_at_origin(f: RadialFunction) -> Jet6:
    """Derivatives of orders 0..5 at the origin (regular bases only)."""
    s = origin_series(f, 5)
    return Jet6(s.coefficients * [factorial(j) for j in range(6)])


def r_switch(f: RadialFunction) -> float:
    """Crossover radius below which the closed form cancels badly."""
    top = float(np.max(np.abs(f.base.rates)))
    return 0.5 / top if top > 0.0 else 0.0


def term_data(f: RadialFunction):
    """(rates, polys) arrays for the closed-form evaluator."""
    polys = np.zeros((len(f.base), f.l + 1), np.complex128)
    for k, chi in enumerate(f.base.rates):
        polys[k] = f.scale * f.base.amplitudes[k] * exponential_poly(f.l, chi)
    return np.asarray(f.base.rates, np.complex128), polys


def eval_radial(f: RadialFunction, r):
    """Evaluate f at r (scalar or array); r = 0 allowed for regular bases."""
    scalar = np.isscalar(r) or np.asarray(r).ndim == 0
    rr = np.atleast_1d(np.asarray(r, np.float64)).ravel()
    if np.any(rr < 0.0):
        raise DomainError("eval_radial requires r >= 0")
    regular = f.regular_at_origin
    if np.any(rr == 0.0) and not regular:
        raise SingularityError("r = 0 evaluation of a non-regular function")
    rs = r_switch(f)
    out = np.empty(rr.shape, np.complex128)
    near = rr <= rs if regular else np.zeros(rr.shape, bool)
    far = ~near
    if np.any(far):
        rates, polys = term_data(f)
        out[far] = _kernels.eval_terms(rr[far], rates, polys)
    if np.any(near):
        out[near] = origin_series(f).eval(rr[near])
    if scalar:
        return complex(out[0])
    return out.reshape(np.asarray(r).shape)


def _differentiate_polys(rates, polys):
    """One d/dr applied to sum_k (poly_k in 1/r) e^{rate_k r}, same representation."""
    n, m = polys.shape
    out = np.zeros((n, m + 1), np.complex128)
    for k in range(n):
        out[k, :m] += rates[k] * polys[k]
        for j in range(m):
            out[k, j + 1] += -j * polys[k, j]
    return out


def derivative(f: RadialFunction, r, order: int = 1):
    """Analytic derivative of the given order (0..6) at r > 0."""
    if not 0 <= order <= 6:
        raise Unsupported("derivative order must be in 0..6")
    if order == 0:
        return eval_radial(f, r)
    scalar = np.isscalar(r) or np.asarray(r).ndim == 0
    rr = np.atleast_1d(np.asarray(r, np.float64)).ravel()
    if np.any(rr <= 0.0):
        raise DomainError("derivative requires r > 0")
    rates, polys = term_data(f)
    for _ in range(order):
        polys = _differentiate_polys(rates, polys)
    regular = f.regular_at_origin
    rs = r_switch(f)
    out = np.empty(rr.shape, np.complex128)
    near = rr <= rs if regular else np.zeros(rr.shape, bool)
    far = ~near
    if np.any(far):
        out[far] = _kernels.eval_terms(rr[far], rates, polys)
    if np.any(near):
        n = min(MAX_SERIES_ORDER, SERIES_ORDER + order)
        c = origin_series(f, n).coefficients
        dc = np.array(
            [c[m] * factorial(m) / factorial(m - order) for m in range(order, n + 1)],
            np.complex128,
        )
        out[near] = _kernels.eval_series(rr[near], dc)
    if scalar:
        return complex(out[0])
    return out.reshape(np.asarray(r).shape)


def verify_rayleigh(l: int, chi: complex, r: float) -> float:
    """Relative residual of T_l D_l e^{chi r} = -D_l(chi^2 e^{chi r}) at r."""
    f = RadialFunction(ExponentialSum([1.0], [chi]), l)
    big_l = l * (l + 1)
    lhs = -derivative(f, r, 2) + big_l / float(r) ** 2 * eval_radial(f, r)
    rhs = -(chi**2) * eval_radial(f, r)
    return abs(lhs - rhs) / (1.0 + abs(eval_radial(f, r)))


def asymptotic_check(f: RadialFunction, r: float) -> float:
    """Relative deviation from the leading large-r form sum_k a_k chi_k^l e^{chi_k r}."""
    val = eval_radial(f, r)
    lead = f.scale * np.sum(
        f.base.amplitudes * f.base.rates**f.l * np.exp(f.base.rates * r)
    )
    denom = abs(val)
    if denom == 0.0:
        return 0.0
    return abs(val - lead) / denom


def t3_termwise(f: RadialFunction) -> RadialFunction:
    """T_l^3 f computed exactly: each exponent chi contributes the factor -chi^6."""
    amps = -f.base.rates**6 * f.base.amplitudes
    return RadialFunction(ExponentialSum(amps, f.base.rates), f.l, f.scale)


def t3_coefficients(l: int):
    """Variable coefficients c_j(r) with T_l^3 f = sum_j c_j(r) f^{(j)}(r).

    Returns a list of (derivative order, power of 1/r, constant) triples.
    """
    if l not in VALID_L:
        raise InvalidSpec(f"l={l} not supported")
    big_l = l * (l + 1)
    return [
        (6, 0, -1.0),
        (4, 2, 3.0 * big_l),
        (3, 3, -12.0 * big_l),
        (2, 4, 3.0 * big_l * (14.0 - big_l)),
        (1, 5, 12.0 * big_l * (big_l - 8.0)),
        (0, 6, big_l * (big_l**2 - 26.0 * big_l + 120.0)),
    ]


def t3_apply_analytic(f: RadialFunction, r):
    """T_l^3 f via the expanded variable-coefficient form and exact derivatives."""
    rr = np.asarray(r, np.float64)
    if np.any(rr <= 0.0):
        raise DomainError("t3_apply_analytic requires r > 0")
    out = 0.0
    for order, pw, const in t3_coefficients(f.l):
        out = out + const / rr**pw * derivative(f, r, order)
    return out
