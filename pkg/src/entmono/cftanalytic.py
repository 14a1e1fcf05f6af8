"""Closed-form scaling predictions for critical chains: excited-state Renyi
ratios, entropy/capacity shifts, the UV-finite S - C combination with its
model constants, ground-state entropy/capacity constants obtained through the
Fisher-Hartwig conjecture, and crossing-point scans.

Lattice units: the UV cutoff is one lattice spacing, so block length ``ell``
doubles as the dimensionless cutoff ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .special import adaptive_simpson, digamma, im_loggamma_half_line, trigamma

LN2 = math.log(2.0)

# Fisher-Hartwig constants of the half-filled chain (quadrature targets of
# upsilon_derivatives): -Upsilon'(1) and Upsilon''(1).
XX_MINUS_UPSILON1 = 0.495018
XX_UPSILON2 = 0.303516

# Fitted constants of the critical transverse-field chain.
ISING_MINUS_C1PRIME = 0.479
ISING_D2_LN_CN = 0.385


class DomainError(ValueError):
    """Argument outside the scaling-function domain."""


class NoSignChange(ValueError):
    """The scanned quantity does not change sign on the given interval."""


@dataclass(frozen=True)
class CftParams:
    """Model constants for the analytic curves.

    ``minus_c1prime`` holds -c1' (the O(1) entropy constant) and ``d2_ln_cn``
    the second n-derivative of ln c_n at n = 1 (the capacity constant).
    ``gamma`` is the excited-state exponent: 1 for the current-type states,
    1/2 for the single-fermion state.  ``L`` = None selects the infinite-line
    ground-state form.
    """

    gamma: float
    c: float
    minus_c1prime: float
    d2_ln_cn: float
    ell: float | None = None
    L: float | None = None

    def with_geometry(self, ell=None, L=None) -> "CftParams":
        return replace(self, ell=ell if ell is not None else self.ell, L=L if L is not None else self.L)


def xx_params(ell: float | None = None, L: float | None = None, gamma: float = 1.0) -> CftParams:
    """Half-filled hopping-chain constants; gamma = 1 targets the current state."""
    return CftParams(
        gamma=gamma,
        c=1.0,
        minus_c1prime=LN2 / 3.0 + XX_MINUS_UPSILON1,
        d2_ln_cn=LN2 / 3.0 + XX_UPSILON2,
        ell=ell,
        L=L,
    )


def ising_params(ell: float | None = None, L: float | None = None, gamma: float = 0.5) -> CftParams:
    """Critical transverse-field chain; gamma = 1/2 targets the fermion state."""
    return CftParams(
        gamma=gamma,
        c=0.5,
        minus_c1prime=ISING_MINUS_C1PRIME,
        d2_ln_cn=ISING_D2_LN_CN,
        ell=ell,
        L=L,
    )


def _check_x(x: float):
    if not (0.0 < x < 1.0):
        raise DomainError(f"need 0 < x < 1, got {x}")


def log_f_n(x: float, n: float) -> float:
    """ln f_n(x) for real n > 0 (log-Gamma form, overflow-safe).

    f_n(x) = ((2/n) sin(pi x))^(2n)
             * [Gamma((1+n+n csc(pi x))/2) / Gamma((1-n+n csc(pi x))/2)]^2
    The second Gamma argument stays positive for every n > 0 since
    csc(pi x) >= 1.
    """
    _check_x(x)
    if n <= 0.0:
        raise DomainError(f"need n > 0, got {n}")
    s = math.sin(math.pi * x)
    csc = 1.0 / s
    upper = 0.5 * (1.0 + n + n * csc)
    lower = 0.5 * (1.0 - n + n * csc)
    return 2.0 * n * math.log(2.0 * s / n) + 2.0 * (math.lgamma(upper) - math.lgamma(lower))


def f_n(x: float, n: float) -> float:
    """Excited-state scaling function f_n(x); f_1(x) = 1 identically."""
    return math.exp(log_f_n(x, n))


def delta_renyi(x: float, n: float, gamma: float) -> float:
    """Excess Renyi entropy of the excited state: gamma ln f_n(x) / (1-n)."""
    if n == 1.0:
        raise DomainError("use delta_s_and_c for the n -> 1 limit")
    return gamma * log_f_n(x, n) / (1.0 - n)


def delta_s_and_c(x: float, gamma: float, step: float = 1e-3) -> tuple[float, float]:
    """Excess entropy and capacity of the excited state.

    Central n-derivatives of ln f_n at n = 1 with one Richardson step:
    delta S = -gamma d/dn ln f_n |_1, delta C = +gamma d^2/dn^2 ln f_n |_1.
    """
    _check_x(x)

    def g(n: float) -> float:
        return log_f_n(x, n)

    def d1(h: float) -> float:
        return (g(1.0 + h) - g(1.0 - h)) / (2.0 * h)

    def d2(h: float) -> float:
        return (g(1.0 + h) - 2.0 * g(1.0) + g(1.0 - h)) / (h * h)

    first = (4.0 * d1(step / 2.0) - d1(step)) / 3.0
    second = (4.0 * d2(step / 2.0) - d2(step)) / 3.0
    return -gamma * first, gamma * second


def s_minus_c(x: float, params: CftParams) -> float:
    """UV-finite S - C of the excited state, in closed form.

    Equals -gamma (d/dn + d^2/dn^2) ln f_n |_{n=1} plus the model constants;
    the derivative combination reduces to digamma/trigamma values at
    1/(2 sin(pi x)).
    """
    _check_x(x)
    s = math.sin(math.pi * x)
    u = 1.0 / (2.0 * s)
    g = params.gamma
    first = 2.0 * (math.log(2.0 * s) + digamma(u) + s)
    second = 2.0 * (-1.0 + trigamma(u) / s - (1.0 + s) ** 2)
    return -g * first - g * second + params.minus_c1prime - params.d2_ln_cn


def gs_entropy_capacity(params: CftParams) -> tuple[float, float]:
    """Ground-state (S, C) of a block: (c/3) ln[(L/pi) sin(pi ell/L)] plus constants.

    With L = None the infinite-line form (c/3) ln(ell) is used.  The model
    constants are the Fisher-Hartwig values for the hopping chain (including
    the ln(2 |sin k_F|)/3 term at k_F = pi/2) and the fitted values for the
    critical transverse-field chain.
    """
    if params.ell is None:
        raise DomainError("params.ell is required")
    if params.L is None:
        lead = (params.c / 3.0) * math.log(params.ell)
    else:
        if not (0.0 < params.ell < params.L):
            raise DomainError("need 0 < ell < L")
        lead = (params.c / 3.0) * math.log((params.L / math.pi) * math.sin(math.pi * params.ell / params.L))
    return lead + params.minus_c1prime, lead + params.d2_ln_cn


def delta_m2(x: float, params: CftParams) -> float:
    """Excess second shifted moment M^(2)(.;1) of the excited state at x = ell/L.

    The block length is held at params.ell while L = ell/x varies, so the
    curve depends on ell through the absolute ground-state values:
    delta M2 = (S_gs + dS + 1)^2 + C_gs + dC - (S_gs + 1)^2 - C_gs.
    """
    _check_x(x)
    if params.ell is None:
        raise DomainError("params.ell is required for delta_m2")
    geo = params.with_geometry(L=params.ell / x)
    s_gs, c_gs = gs_entropy_capacity(geo)
    ds, dc = delta_s_and_c(x, params.gamma)
    return (s_gs + ds + 1.0) ** 2 + (c_gs + dc) - (s_gs + 1.0) ** 2 - c_gs


def upsilon_derivatives(cutoff: float = 20.0, tol: float = 1e-9) -> tuple[float, float]:
    """First and second n-derivatives of the Fisher-Hartwig Upsilon(n) at n = 1.

    Upsilon'(1) = int (-pi w / cosh^2 pi w) (-2 Im ln Gamma(1/2 + i w)) dw and
    the analogous second-derivative kernel; both integrands are even and decay
    like exp(-2 pi w), so truncation at ``cutoff`` = 20 is far below the
    quadrature tolerance.  Targets: -Upsilon'(1) = 0.495018,
    Upsilon''(1) = 0.303516.
    """

    def kernel1(w: float) -> float:
        c = math.cosh(math.pi * w)
        return (-math.pi * w / (c * c)) * (-2.0 * im_loggamma_half_line(w))

    def kernel2(w: float) -> float:
        c = math.cosh(math.pi * w)
        t = math.tanh(math.pi * w)
        base = -2.0 * math.pi * w / (c * c) + 2.0 * math.pi**2 * w * w * t / (c * c)
        return base * (-2.0 * im_loggamma_half_line(w))

    u1 = 2.0 * adaptive_simpson(kernel1, 0.0, cutoff, tol / 2.0)
    u2 = 2.0 * adaptive_simpson(kernel2, 0.0, cutoff, tol / 2.0)
    return u1, u2


_QUANTITIES = ("deltaS", "deltaS2", "deltaS3", "deltaM2")


def curve(quantity: str, params: CftParams):
    """Callable x -> value for one of deltaS | deltaS2 | deltaS3 | deltaM2."""
    if quantity == "deltaS":
        return lambda x: delta_s_and_c(x, params.gamma)[0]
    if quantity == "deltaS2":
        return lambda x: delta_renyi(x, 2, params.gamma)
    if quantity == "deltaS3":
        return lambda x: delta_renyi(x, 3, params.gamma)
    if quantity == "deltaM2":
        return lambda x: delta_m2(x, params)
    raise DomainError(f"unknown quantity {quantity!r}; choose from {_QUANTITIES}")


def find_crossing(
    quantity: str,
    params: CftParams,
    lo: float = 0.01,
    hi: float = 0.5,
    xtol: float = 1e-6,
) -> float:
    """Bisect the analytic curve for its sign change on (lo, hi)."""
    fn = curve(quantity, params)
    flo = fn(lo)
    fhi = fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise NoSignChange(f"{quantity} has the same sign at {lo} and {hi}")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fmid = fn(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)
