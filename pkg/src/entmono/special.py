"""Self-contained special functions and quadrature.

Real digamma/trigamma by upward recurrence into the asymptotic (de Moivre)
series; complex log-Gamma by argument shifting into a Stirling series kept on
the principal branch (all shifted factors have positive real part, so the
imaginary part is continuous along vertical lines in the right half-plane);
adaptive Simpson quadrature with Richardson acceleration.
"""

from __future__ import annotations

import cmath
import math

_ASYMPTOTIC_EDGE = 8.0

# B_{2k}/(2k) for the digamma tail, k = 1..6
_DIGAMMA_TAIL = (1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0)

# B_{2k} for the trigamma tail, k = 1..6
_BERNOULLI = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0)

# B_{2k}/(2k(2k-1)) for the Stirling series of ln Gamma, k = 1..7
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


class QuadratureNoConvergence(ArithmeticError):
    """Adaptive Simpson hit its recursion budget before meeting tolerance."""


def digamma(x: float) -> float:
    """Digamma psi(x) for x > 0, relative accuracy ~1e-13."""
    if x <= 0.0:
        raise ValueError("digamma implemented for x > 0 only")
    acc = 0.0
    while x < _ASYMPTOTIC_EDGE:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for coeff in _DIGAMMA_TAIL:
        tail += coeff * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - tail


def trigamma(x: float) -> float:
    """Trigamma psi'(x) for x > 0, relative accuracy ~1e-13."""
    if x <= 0.0:
        raise ValueError("trigamma implemented for x > 0 only")
    acc = 0.0
    while x < _ASYMPTOTIC_EDGE:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = 1.0 + 0.5 * inv
    power = inv2
    for b in _BERNOULLI:
        tail += b * power
        power *= inv2
    return acc + inv * tail


def loggamma(z: complex) -> complex:
    """Principal-branch ln Gamma(z) for Re z > 0."""
    z = complex(z)
    if z.real <= 0.0:
        raise ValueError("loggamma implemented for Re z > 0 only")
    shift = 0.0 + 0.0j
    while abs(z) < 12.0:
        shift += cmath.log(z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    series = 0.0 + 0.0j
    power = inv
    for coeff in _STIRLING:
        series += coeff * power
        power *= inv2
    return (z - 0.5) * cmath.log(z) - z + _HALF_LOG_TWO_PI + series - shift


def im_loggamma_half_line(w: float) -> float:
    """Im ln Gamma(1/2 + i w)."""
    return loggamma(0.5 + 1j * w).imag


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, b, fa, fm, fb, whole, tol, depth, force):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if force <= 0 and abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureNoConvergence(f"interval [{a}, {b}] did not converge")
    return _adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, force - 1) + _adaptive(
        f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, force - 1
    )


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-9, max_depth: int = 40, min_depth: int = 4) -> float:
    """Adaptive Simpson quadrature of f on [a, b] to absolute tolerance tol.

    ``min_depth`` forces that many initial bisection levels so localized
    integrands cannot self-certify on a coarse grid.
    """
    if b <= a:
        raise ValueError("need b > a")
    fa = f(a)
    fb = f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = _simpson(fa, fm, fb, b - a)
    return _adaptive(f, a, b, fa, fm, fb, whole, tol, max_depth, min_depth)
