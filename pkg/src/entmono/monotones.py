"""Moments and cumulants of -ln(rho), shifted-moment monotones, and extremal
polynomial monotones with their optimized majorization inequalities.

Conventions: natural logarithms throughout; the value 0 * (ln 0)^k is taken
to be 0 for zero eigenvalues (the x -> 0 limit of x (ln x)^k).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .spectra import Spectrum

DM_TOL = 1e-12  # degenerate-denominator threshold for the inequality slacks


class AlphaOutOfRange(ValueError):
    """Renyi index must be positive and different from 1."""


class StepOutOfRange(ValueError):
    """Finite-difference step outside the supported window."""


class DegenerateDenominator(ZeroDivisionError):
    """Quadratic-minimum slack undefined: leading Delta-M vanished."""


class NegativeRoot(ValueError):
    """Extremal polynomial roots must be nonnegative."""


class ConcavityWarning(UserWarning):
    """Shift below n-1: the shifted moment is not guaranteed concave."""


# ---------------------------------------------------------------------------
# moments / cumulants


def moments(spec: Spectrum, kmax: int) -> np.ndarray:
    """Moments mu_k = sum_i p_i (-ln p_i)^k for k = 1..kmax."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    p = spec.probs
    x = p[p > 0.0]
    u = -np.log(x)
    mu = np.array([float(np.dot(x, u**k)) for k in range(1, kmax + 1)])
    return mu


def cumulants_from_moments(mu) -> np.ndarray:
    """Standard recursive conversion C_n = mu_n - sum_k C(n-1,k-1) C_k mu_{n-k}."""
    mu = np.asarray(mu, dtype=float)
    n = mu.size
    c = np.empty(n)
    for i in range(1, n + 1):
        acc = mu[i - 1]
        for k in range(1, i):
            acc -= math.comb(i - 1, k - 1) * c[k - 1] * mu[i - k - 1]
        c[i - 1] = acc
    return c


def moments_from_cumulants(c) -> np.ndarray:
    """Inverse of :func:`cumulants_from_moments`."""
    c = np.asarray(c, dtype=float)
    n = c.size
    mu = np.empty(n)
    for i in range(1, n + 1):
        acc = c[i - 1]
        for k in range(1, i):
            acc += math.comb(i - 1, k - 1) * c[k - 1] * mu[i - k - 1]
        mu[i - 1] = acc
    return mu


@dataclass(frozen=True)
class ModularStats:
    """Moments and cumulants of -ln(rho) up to a requested order.

    entropy is the first cumulant, capacity the second.
    """

    order: int
    moments: tuple
    cumulants: tuple

    @property
    def entropy(self) -> float:
        return self.cumulants[0]

    @property
    def capacity(self) -> float:
        return self.cumulants[1] if self.order >= 2 else 0.0


def modular_stats(spec: Spectrum, order: int) -> ModularStats:
    mu = moments(spec, order)
    c = cumulants_from_moments(mu)
    return ModularStats(order=order, moments=tuple(mu), cumulants=tuple(c))


def entropy(spec: Spectrum) -> float:
    return float(moments(spec, 1)[0])


def capacity(spec: Spectrum) -> float:
    c = cumulants_from_moments(moments(spec, 2))
    return float(c[1])


def renyi(spec: Spectrum, alpha: float) -> float:
    """Renyi entropy (1/(1-alpha)) ln sum_i p_i^alpha, in nats."""
    if alpha <= 0.0 or alpha == 1.0:
        raise AlphaOutOfRange(f"alpha must be positive and != 1, got {alpha}")
    p = spec.probs
    x = p[p > 0.0]
    return float(np.log(np.sum(x**alpha)) / (1.0 - alpha))


# ---------------------------------------------------------------------------
# shifted-moment monotones M^(n)(rho; b)


@dataclass(frozen=True)
class ShiftParams:
    """Order n and shift b of a shifted modular-Hamiltonian moment."""

    n: int
    b: float

    @property
    def concave(self) -> bool:
        # b >= n-1 makes x(-ln x + b)^n concave on [0,1].
        return self.b >= self.n - 1


def shifted_moment(spec: Spectrum, n: int, b: float | None = None) -> float:
    """M^(n)(rho; b) = sum_i p_i (-ln p_i + b)^n - b^n.

    ``b`` defaults to the minimal concave shift n-1.  A smaller b is allowed
    but emits :class:`ConcavityWarning` since monotonicity is then not
    guaranteed.
    """
    if n < 1:
        raise ValueError("order n must be >= 1")
    if b is None:
        b = float(n - 1)
    if b < n - 1 - 1e-12:
        warnings.warn(
            f"shift b={b} below concavity threshold n-1={n - 1}",
            ConcavityWarning,
            stacklevel=2,
        )
    p = spec.probs
    x = p[p > 0.0]
    return float(np.dot(x, (-np.log(x) + b) ** n) - b**n)


def richardson_derivative(central, h: float, levels: int = 2) -> float:
    """Extrapolate an even-error central-difference estimator D(h).

    One level removes the h^2 term, two levels also the h^4 term; two are
    needed to hold 1e-6 at order 4 down to eigenvalues of 1e-6.
    """
    table = [central(h / 2.0**j) for j in range(levels + 1)]
    factor = 4.0
    for _ in range(levels):
        table = [(factor * hi - lo) / (factor - 1.0) for lo, hi in zip(table, table[1:])]
        factor *= 4.0
    return table[0]


def shifted_moment_fd(spec: Spectrum, n: int, b: float | None = None, h: float = 4e-2) -> float:
    """M^(n) from the Renyi generating function by n-th central differences.

    Differentiates the conditioned generating function
    k(a) = exp((1-a) b) sum_i p_i^a at a = 1 (Richardson-extrapolated), then
    applies (-1)^n (.) - b^n.  Agrees with :func:`shifted_moment` to better
    than 1e-6 for n <= 4 on spectra with min eigenvalue >= 1e-6.
    """
    if n < 1:
        raise ValueError("order n must be >= 1")
    if b is None:
        b = float(n - 1)
    if not (1e-4 <= h <= 1e-1):
        raise StepOutOfRange(f"step h={h} outside [1e-4, 1e-1]")
    p = spec.probs
    x = p[p > 0.0]

    def k(alpha: float) -> float:
        # e^b-conditioned form of e^{-alpha b} Tr rho^alpha: equals 1 at alpha = 1
        return math.exp((1.0 - alpha) * b) * float(np.sum(x**alpha))

    def central(step: float) -> float:
        acc = 0.0
        for j in range(n + 1):
            acc += (-1) ** j * math.comb(n, j) * k(1.0 + (n / 2.0 - j) * step)
        return acc / step**n

    return (-1.0) ** n * richardson_derivative(central, h) - b**n


# ---------------------------------------------------------------------------
# generalized gamma monotones


@dataclass(frozen=True)
class GammaMonotone:
    """Linear combination mu_n + sum_j gamma_j mu_j + gamma_0.

    ``gammas`` holds (gamma_0, ..., gamma_{n-1}).
    """

    n: int
    gammas: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order n must be >= 1")
        if len(self.gammas) != self.n:
            raise ValueError(f"need {self.n} coefficients gamma_0..gamma_{self.n - 1}")


def gamma_from_shift(n: int, b: float) -> GammaMonotone:
    """Gamma coefficients of the binomial expansion of (-ln x + b)^n (no constant)."""
    gammas = [0.0] + [float(math.comb(n, j) * b ** (n - j)) for j in range(1, n)]
    return GammaMonotone(n=n, gammas=tuple(gammas))


def gamma_monotone(spec: Spectrum, gm: GammaMonotone) -> float:
    mu = moments(spec, gm.n)
    val = mu[gm.n - 1] + gm.gammas[0]
    for j in range(1, gm.n):
        val += gm.gammas[j] * mu[j - 1]
    return float(val)


def concavity_check(gm: GammaMonotone, npoints: int = 1000) -> bool:
    """Sample d^2/dx^2 [x F_n(x)] on log-spaced points of (0,1].

    F_n(x) = (-ln x)^n + sum_j gamma_j (-ln x)^j; the scalar function is
    concave iff the sampled second derivative stays <= 1e-9.
    """
    xs = np.logspace(-12.0, 0.0, npoints)
    u = -np.log(xs)
    coeff = {gm.n: 1.0}
    for j in range(1, gm.n):
        coeff[j] = coeff.get(j, 0.0) + gm.gammas[j]
    # d2/dx2 [x u^j] = -(j/x) (u^(j-1) - (j-1) u^(j-2))
    total = np.zeros_like(xs)
    for j, cj in coeff.items():
        if cj == 0.0:
            continue
        term = j * u ** (j - 1)
        if j >= 2:
            term = term - j * (j - 1) * u ** (j - 2)
        total += cj * (-term / xs)
    return bool(np.all(total <= 1e-9))


# ---------------------------------------------------------------------------
# extremal polynomial monotones


@dataclass(frozen=True)
class ExtremalPoly:
    """Polynomial F of degree n solving F'' + F' = G with G >= 0 on y <= 0.

    G = prod_i (y + a_i)^2 when its degree n-1 is even, and
    G = -y prod_i (y + a_i)^2 when n-1 is odd; all roots a_i >= 0.
    Coefficients are solved exactly over the rationals, so the identity
    (j+1) f_{j+1} + (j+2)(j+1) f_{j+2} = g_j holds with zero residual.
    """

    n: int
    parity: str                 # parity of deg G = n-1: 'even' | 'odd'
    roots: tuple
    fcoeffs: tuple              # f_1..f_n (float), zero constant term
    gcoeffs: tuple              # g_0..g_{n-1} (float)
    exact_fcoeffs: tuple        # same, as Fraction
    exact_gcoeffs: tuple


def _g_coefficients_exact(n: int, roots) -> list:
    """Ascending coefficients of G (degree n-1) as Fractions."""
    g = [Fraction(1)]
    for a in roots:
        af = Fraction(a)
        # multiply by (y + a)^2 = y^2 + 2a y + a^2
        sq = [af * af, 2 * af, Fraction(1)]
        new = [Fraction(0)] * (len(g) + 2)
        for i, gi in enumerate(g):
            for j, sj in enumerate(sq):
                new[i + j] += gi * sj
        g = new
    if (n - 1) % 2 == 1:
        # multiply by -y
        g = [Fraction(0)] + [-gi for gi in g]
    if len(g) != n:
        raise AssertionError("internal degree bookkeeping error")
    return g


def _solve_f_from_g(g: list) -> list:
    """Top-down solve of (j+1) f_{j+1} + (j+2)(j+1) f_{j+2} = g_j; returns f_1..f_n."""
    n = len(g)
    f = [Fraction(0)] * (n + 2)  # 1-indexed, f[n+1] = 0 sentinel
    f[n] = g[n - 1] / n
    for j in range(n - 2, -1, -1):
        f[j + 1] = (g[j] - (j + 2) * (j + 1) * f[j + 2]) / (j + 1)
    return f[1 : n + 1]


def extremal_poly(n: int, roots=()) -> ExtremalPoly:
    """Build the degree-n extremal polynomial monotone from its G-roots.

    ``roots`` must contain floor((n-1)/2) nonnegative reals.
    """
    if n < 1:
        raise ValueError("degree n must be >= 1")
    roots = tuple(float(a) for a in roots)
    need = (n - 1) // 2
    if len(roots) != need:
        raise ValueError(f"degree {n} needs {need} roots, got {len(roots)}")
    if any(a < 0.0 for a in roots):
        raise NegativeRoot(f"roots must be >= 0, got {roots}")
    g = _g_coefficients_exact(n, roots)
    f = _solve_f_from_g(g)
    return ExtremalPoly(
        n=n,
        parity="even" if (n - 1) % 2 == 0 else "odd",
        roots=roots,
        fcoeffs=tuple(float(v) for v in f),
        gcoeffs=tuple(float(v) for v in g),
        exact_fcoeffs=tuple(f),
        exact_gcoeffs=tuple(g),
    )


def _fcoeffs_float(n: int, roots) -> np.ndarray:
    """Float fast path of the G-construction + recurrence (for optimizers)."""
    g = np.array([1.0])
    for a in roots:
        g = np.convolve(g, np.array([a * a, 2.0 * a, 1.0]))
    if (n - 1) % 2 == 1:
        g = np.concatenate(([0.0], -g))
    f = np.zeros(n + 2)
    f[n] = g[n - 1] / n
    for j in range(n - 2, -1, -1):
        f[j + 1] = (g[j] - (j + 2) * (j + 1) * f[j + 2]) / (j + 1)
    return f[1 : n + 1]


def poly_value(poly: ExtremalPoly, y) -> np.ndarray:
    """Evaluate F(y) (zero constant term)."""
    y = np.asarray(y, dtype=float)
    acc = np.zeros_like(y)
    for fj in reversed(poly.fcoeffs):
        acc = (acc + fj) * y
    return acc


def g_value(poly: ExtremalPoly, y) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    acc = np.zeros_like(y)
    for gj in reversed(poly.gcoeffs):
        acc = acc * y + gj
    return acc


def extremal_value(spec: Spectrum, poly: ExtremalPoly) -> float:
    """P(rho) = sum_i p_i F(ln p_i), with 0 * F(ln 0) = 0.

    Schur convex: rho majorizing sigma implies P(rho) >= P(sigma).
    """
    p = spec.probs
    x = p[p > 0.0]
    return float(np.dot(x, poly_value(poly, np.log(x))))


def _log_power_sums(spec: Spectrum, nmax: int) -> np.ndarray:
    """m_j = sum_i p_i (ln p_i)^j for j = 1..nmax."""
    p = spec.probs
    x = p[p > 0.0]
    u = np.log(x)
    return np.array([float(np.dot(x, u**j)) for j in range(1, nmax + 1)])


# ---------------------------------------------------------------------------
# Delta-M ladder and the optimized inequalities


def delta_m(rho: Spectrum, sigma: Spectrum, nmax: int) -> np.ndarray:
    """Delta M_n = M^(n)(sigma; n-1) - M^(n)(rho; n-1) for n = 1..nmax.

    All entries are >= 0 whenever rho majorizes sigma.
    """
    return np.array(
        [shifted_moment(sigma, n) - shifted_moment(rho, n) for n in range(1, nmax + 1)]
    )


@dataclass(frozen=True)
class InequalitySlack:
    """Slack of an optimized extremal inequality.

    ``boundary`` marks the degenerate branch where the quadratic vertex fell
    outside a >= 0 and the slack was evaluated at a = 0 instead.
    """

    slack: float
    boundary: bool

    def __float__(self) -> float:
        return self.slack


def _spectra_equal(rho: Spectrum, sigma: Spectrum) -> bool:
    if rho.dim != sigma.dim:
        return False
    return bool(np.array_equal(rho.sorted_desc(), sigma.sorted_desc()))


def inequality3_slack(rho: Spectrum, sigma: Spectrum) -> InequalitySlack:
    """Slack of Delta M_3 >= 3 Delta M_2 + (3/4) (Delta M_2)^2 / Delta M_1.

    Nonnegative whenever rho majorizes sigma.  When the quadratic's vertex
    a_0 = Delta M_2 / (2 Delta M_1) is negative the boundary value
    w_0 = Delta M_3 / 3 - Delta M_2 is reported instead.
    """
    if _spectra_equal(rho, sigma):
        return InequalitySlack(0.0, False)
    dm1, dm2, dm3 = delta_m(rho, sigma, 3)
    if dm1 <= DM_TOL:
        if abs(dm2) > DM_TOL:
            raise DegenerateDenominator(f"Delta M_1 = {dm1:.3e} with Delta M_2 = {dm2:.3e}")
        return InequalitySlack(dm3 / 3.0 - dm2, True)
    if dm2 / (2.0 * dm1) < 0.0:
        return InequalitySlack(dm3 / 3.0 - dm2, True)
    return InequalitySlack(dm3 - 3.0 * dm2 - 0.75 * dm2 * dm2 / dm1, False)


def inequality4_slack(rho: Spectrum, sigma: Spectrum) -> InequalitySlack:
    """Slack of Delta M_4 >= 8 Delta M_3 - 6 Delta M_2 + (8/9)(Delta M_3 - 3 Delta M_2)^2 / Delta M_2."""
    if _spectra_equal(rho, sigma):
        return InequalitySlack(0.0, False)
    dm1, dm2, dm3, dm4 = delta_m(rho, sigma, 4)
    w1 = -(2.0 / 3.0) * (dm3 - 3.0 * dm2)
    w0 = (dm4 - 8.0 * dm3 + 6.0 * dm2) / 4.0
    if dm2 <= DM_TOL:
        if abs(w1) > DM_TOL:
            raise DegenerateDenominator(f"Delta M_2 = {dm2:.3e} with Delta M_3 - 3 Delta M_2 != 0")
        return InequalitySlack(w0, True)
    if -w1 / dm2 < 0.0:  # vertex a_0 = -w1/(2 w2), w2 = dm2/2
        return InequalitySlack(w0, True)
    return InequalitySlack(
        dm4 - 8.0 * dm3 + 6.0 * dm2 - (8.0 / 9.0) * (dm3 - 3.0 * dm2) ** 2 / dm2, False
    )


@dataclass(frozen=True)
class OptimizedSlack:
    """Result of the root-vector search: minimal slack, minimizer, convergence flag."""

    slack: float
    roots: tuple
    converged: bool


def optimized_extremal_slack(
    rho: Spectrum,
    sigma: Spectrum,
    n: int,
    grid_points: int = 32,
    max_iters: int = 100,
    step_tol: float = 1e-8,
    a_max: float | None = None,
) -> OptimizedSlack:
    """Tightest degree-n extremal inequality slack over root vectors a in [0, a_max]^k.

    Minimizes n * [P_a(rho) - P_a(sigma)] (the factor n normalizes F to unit
    leading coefficient, so n = 3, 4 reproduce the closed-form slacks).
    Coarse grid first, then coordinate descent with step halving.
    """
    if n < 1:
        raise ValueError("degree n must be >= 1")
    k = (n - 1) // 2
    mr = _log_power_sums(rho, n)
    ms = _log_power_sums(sigma, n)
    dm = mr - ms  # P_a(rho) - P_a(sigma) = sum_j f_j (mr_j - ms_j)

    def slack_at(roots) -> float:
        f = _fcoeffs_float(n, roots)
        return n * float(np.dot(f, dm))

    if k == 0:
        return OptimizedSlack(slack_at(()), (), True)

    if a_max is None:
        a_max = 2.0 * (entropy(rho) + entropy(sigma) + n)

    axis = np.linspace(0.0, a_max, grid_points)
    best_roots = None
    best = math.inf
    for idx in np.ndindex(*([grid_points] * k)):
        roots = tuple(axis[list(idx)])
        val = slack_at(roots)
        if val < best:
            best, best_roots = val, roots

    step = axis[1] - axis[0]
    roots = list(best_roots)
    converged = False
    for _ in range(max_iters):
        improved = False
        for i in range(k):
            for cand in (roots[i] + step, roots[i] - step):
                cand = min(max(cand, 0.0), a_max)
                trial = roots.copy()
                trial[i] = cand
                val = slack_at(trial)
                if val < best - 1e-15:
                    best, roots, improved = val, trial, True
        if not improved:
            step *= 0.5
            if step < step_tol:
                converged = True
                break
    return OptimizedSlack(best, tuple(roots), converged)


def p2_extremal(spec: Spectrum) -> float:
    """P^(2)_E with unit leading coefficient: -M^(2)(rho; 1) = -(mu_2 + 2 mu_1)."""
    return -shifted_moment(spec, 2, 1.0)
