"""Relative quantifiers for commuting pairs: relative moments/cumulants,
shifted relative monotones, entropy-production bounds, and the finite-size
Clausius correction.

All quantifiers act on :class:`~entmono.spectra.CommutingPair` instances
(index-paired eigenvalue vectors); the non-commuting case is out of scope and
rejected at the type level.  k_B = 1, temperatures enter only via beta.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .monotones import (
    AlphaOutOfRange,
    DegenerateDenominator,
    ExtremalPoly,
    cumulants_from_moments,
    entropy,
    poly_value,
    richardson_derivative,
)
from .spectra import CommutingPair, DimMismatch, RankDeficientReference, Spectrum

DM_TOL = 1e-12


class NonpositiveX(ValueError):
    """The multiplicative parameter x must be positive."""


@dataclass(frozen=True)
class RelativeStats:
    """Moments and cumulants of ln(r) - ln(s) under r, up to ``order``."""

    order: int
    moments: tuple          # Tr[rho (ln rho - ln sigma)^k]
    cumulants: tuple

    @property
    def rel_entropy(self) -> float:
        return self.moments[0]

    @property
    def rel_variance(self) -> float:
        return self.cumulants[1] if self.order >= 2 else 0.0


def _log_ratio(pair: CommutingPair) -> tuple[np.ndarray, np.ndarray]:
    """Return (r restricted to support, ln r - ln s on that support)."""
    pair.require_full_rank()
    r = pair.r.probs
    s = pair.s.probs
    mask = r > 0.0
    return r[mask], np.log(r[mask]) - np.log(s[mask])


def relative_stats(pair: CommutingPair, kmax: int) -> RelativeStats:
    """Relative moments Tr[rho (ln rho - ln sigma)^k] and their cumulants."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    r, w = _log_ratio(pair)
    mu = np.array([float(np.dot(r, w**k)) for k in range(1, kmax + 1)])
    return RelativeStats(order=kmax, moments=tuple(mu), cumulants=tuple(cumulants_from_moments(mu)))


def rel_entropy(pair: CommutingPair) -> float:
    return relative_stats(pair, 1).rel_entropy


def relative_shifted_moment(pair: CommutingPair, n: int, b: float, x: float) -> float:
    """M^(n)_{b,x}(r||s) = (-1)^n sum_i r_i (ln r_i - ln s_i + ln x - b)^n."""
    if n < 1:
        raise ValueError("order n must be >= 1")
    if x <= 0.0:
        raise NonpositiveX(f"x must be positive, got {x}")
    r, w = _log_ratio(pair)
    return float((-1.0) ** n * np.dot(r, (w + math.log(x) - b) ** n))


def relative_extremal(pair: CommutingPair, poly: ExtremalPoly, x: float) -> float:
    """P^(n)_{E,x}(r||s) = -sum_i r_i F(ln r_i - ln s_i + ln x).

    Non-decreasing under simultaneous stochastic processing of the pair when
    x is the smallest eigenvalue of the initial reference.
    """
    if x <= 0.0:
        raise NonpositiveX(f"x must be positive, got {x}")
    r, w = _log_ratio(pair)
    return float(-np.dot(r, poly_value(poly, w + math.log(x))))


def petz_renyi(pair: CommutingPair, alpha: float) -> float:
    """Petz-Renyi relative entropy (1/(alpha-1)) ln sum_i r_i^alpha s_i^(1-alpha)."""
    if alpha <= 0.0 or alpha == 1.0:
        raise AlphaOutOfRange(f"alpha must be positive and != 1, got {alpha}")
    pair.require_full_rank()
    r = pair.r.probs
    s = pair.s.probs
    mask = r > 0.0
    val = np.sum(r[mask] ** alpha * s[mask] ** (1.0 - alpha))
    return float(np.log(val) / (alpha - 1.0))


def relative_generating(pair: CommutingPair, alpha: float, a: float) -> float:
    """k_rel(alpha; a) = exp(-alpha a) sum_i r_i^alpha s_i^(1-alpha).

    The relative shifted moments are (-1)^n e^a d^n/dalpha^n k_rel at
    alpha = 1, a = b - ln x.
    """
    pair.require_full_rank()
    r = pair.r.probs
    s = pair.s.probs
    mask = r > 0.0
    return float(math.exp(-alpha * a) * np.sum(r[mask] ** alpha * s[mask] ** (1.0 - alpha)))


def relative_shifted_moment_fd(pair: CommutingPair, n: int, b: float, x: float, h: float = 4e-2) -> float:
    """Finite-difference evaluation of the relative shifted moment (oracle check).

    Uses the e^a-conditioned generating function e^{(1-alpha) a} k-form so no
    large prefactor amplifies the difference noise.
    """
    if x <= 0.0:
        raise NonpositiveX(f"x must be positive, got {x}")
    a = b - math.log(x)
    pair.require_full_rank()
    r = pair.r.probs
    s = pair.s.probs
    mask = r > 0.0
    rm, sm = r[mask], s[mask]

    def k(alpha: float) -> float:
        return math.exp((1.0 - alpha) * a) * float(np.sum(rm**alpha * sm ** (1.0 - alpha)))

    def central(step: float) -> float:
        acc = 0.0
        for j in range(n + 1):
            acc += (-1) ** j * math.comb(n, j) * k(1.0 + (n / 2.0 - j) * step)
        return acc / step**n

    return (-1.0) ** n * richardson_derivative(central, h)


# ---------------------------------------------------------------------------
# entropy-production bounds


@dataclass(frozen=True)
class ProductionBounds:
    """Relative entropy production and its two lower bounds.

    ``tight`` divides by 2a - S - S' (a = 1 - ln s_min of the initial
    reference); ``relaxed`` divides by 2 sqrt(M^(2)_{1,s_min} of the initial
    pair).  Both bound ``delta_s_rel`` from below on sigma-majorizing
    transitions.
    """

    delta_s_rel: float
    tight: float
    relaxed: float


def rel_entropy_production_bounds(before: CommutingPair, after: CommutingPair) -> ProductionBounds:
    sb = relative_stats(before, 2)
    sa = relative_stats(after, 2)
    d_s = sb.rel_entropy - sa.rel_entropy
    d_c = sb.rel_variance - sa.rel_variance
    s_min = before.s_min
    if s_min <= 0.0:
        raise RankDeficientReference("initial reference has a zero eigenvalue")
    a = 1.0 - math.log(s_min)
    denom_tight = 2.0 * a - sb.rel_entropy - sa.rel_entropy
    m2 = relative_shifted_moment(before, 2, 1.0, s_min)
    if denom_tight <= DM_TOL or m2 <= DM_TOL:
        raise DegenerateDenominator("entropy-production denominators collapsed")
    return ProductionBounds(
        delta_s_rel=d_s,
        tight=d_c / denom_tight,
        relaxed=d_c / (2.0 * math.sqrt(m2)),
    )


def relative_inequality3_slack(before: CommutingPair, after: CommutingPair) -> float:
    """Slack of Delta M3_rel >= 3 Delta M2_rel + (3/4) (Delta M2_rel)^2 / Delta M1_rel.

    Delta M_n_rel uses b = n-1 and x = s_min of the initial reference.
    Nonnegative on sigma-majorizing transitions.
    """
    x = before.s_min
    dm = [
        relative_shifted_moment(after, n, float(n - 1), x)
        - relative_shifted_moment(before, n, float(n - 1), x)
        for n in (1, 2, 3)
    ]
    dm1, dm2, dm3 = dm
    if abs(dm1) <= DM_TOL and abs(dm2) <= DM_TOL and abs(dm3) <= DM_TOL:
        return 0.0
    if dm1 <= DM_TOL:
        if abs(dm2) > DM_TOL:
            raise DegenerateDenominator(f"Delta M1_rel = {dm1:.3e} with Delta M2_rel = {dm2:.3e}")
        return dm3 / 3.0 - dm2
    if dm2 / (2.0 * dm1) < 0.0:
        return dm3 / 3.0 - dm2
    return dm3 - 3.0 * dm2 - 0.75 * dm2 * dm2 / dm1


# ---------------------------------------------------------------------------
# thermal states and the Clausius correction


@dataclass(frozen=True)
class ThermalSpec:
    """Energy spectrum with inverse temperature; derives the Gibbs state.

    Units: k_B = 1, so beta carries 1/energy and all entropies are in nats.
    """

    energies: tuple
    beta: float

    def __post_init__(self):
        if len(self.energies) < 1:
            raise ValueError("need at least one energy level")
        if self.beta < 0.0:
            raise ValueError("beta must be >= 0")

    @property
    def dim(self) -> int:
        return len(self.energies)

    @property
    def e_max(self) -> float:
        return float(max(self.energies))

    @property
    def log_z(self) -> float:
        e = np.asarray(self.energies, dtype=float)
        w = -self.beta * e
        m = w.max()
        return float(m + np.log(np.sum(np.exp(w - m))))

    @property
    def z(self) -> float:
        return math.exp(self.log_z)

    @property
    def helmholtz(self) -> float:
        """F(beta) = -ln Z / beta (beta > 0 only)."""
        if self.beta == 0.0:
            raise ValueError("Helmholtz free energy undefined at beta = 0")
        return -self.log_z / self.beta

    def gibbs(self) -> Spectrum:
        e = np.asarray(self.energies, dtype=float)
        w = -self.beta * e - self.log_z
        return Spectrum(np.exp(w))

    @property
    def s_min(self) -> float:
        return math.exp(-self.beta * self.e_max - self.log_z)


def read_thermal_spec(path) -> ThermalSpec:
    """Read a ThermalSpec from JSON: {"energies": [...], "beta": x}."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return ThermalSpec(energies=tuple(float(e) for e in data["energies"]), beta=float(data["beta"]))


@dataclass(frozen=True)
class ClausiusReport:
    """Finite-size Clausius inequality pieces.

    lhs = S(gibbs) - S(rho); rhs uses the weaker denominator
    2 + 2 beta (E_max - F); middle_rhs uses 2 sqrt(M^(2)_{1,s_min}).
    Slacks are lhs - rhs; both are >= 0 whenever rho thermomajorizes the
    Gibbs state (which the L1 criterion confirms for every commuting rho).
    """

    lhs: float
    rhs: float
    slack: float
    middle_rhs: float
    middle_slack: float


def clausius_slack(th: ThermalSpec, rho: Spectrum) -> ClausiusReport:
    """Evaluate the finite-size Clausius correction for rho against th.

    rho is paired with the energies by index (shared eigenbasis ordering).
    """
    if rho.dim != th.dim:
        raise DimMismatch(f"rho has dim {rho.dim}, thermal spec has {th.dim} levels")
    gibbs = th.gibbs()
    e = np.asarray(th.energies, dtype=float)
    pair = CommutingPair(rho, gibbs)
    stats = relative_stats(pair, 2)
    lhs = entropy(gibbs) - entropy(rho)
    dh = float(np.dot(gibbs.probs, e) - np.dot(rho.probs, e))
    # 2 + 2 beta (E_max - F) = 2 (1 - ln s_min)
    denom_weak = 2.0 + 2.0 * (th.beta * th.e_max + th.log_z)
    rhs = th.beta * dh + stats.rel_variance / denom_weak
    m2 = relative_shifted_moment(pair, 2, 1.0, th.s_min)
    middle_rhs = th.beta * dh + stats.rel_variance / (2.0 * math.sqrt(m2))
    return ClausiusReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        middle_rhs=middle_rhs,
        middle_slack=lhs - middle_rhs,
    )
