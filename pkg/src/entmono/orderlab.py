"""Cone-ordering experiments: compare the partial orders generated by the
monotone sequences against majorization on sampled spectra.

A spectrum pair is ``forward``-ordered by the degree-n cone when every
monotone of the family up to degree n orders it the same way majorization
would; the census tabulates how often the cone orders pairs that majorization
leaves incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .monotones import (
    DegenerateDenominator,
    entropy,
    inequality3_slack,
    inequality4_slack,
    optimized_extremal_slack,
    p2_extremal,
    shifted_moment,
)
from .spectra import Spectrum, majorization_verdict

FAMILIES = ("msequence", "extremal")
VERDICTS = ("forward", "backward", "equal", "incomparable")
ORD_TOL = 1e-12


class BudgetExceeded(ValueError):
    """Census request beyond the supported size."""


@dataclass(frozen=True)
class OrderVerdict:
    """Majorization verdict plus cumulative cone verdicts and forward gaps.

    ``cone_orders[n]`` uses all monotones of the family up to degree n;
    ``gaps[n]`` is the degree-n forward slack (positive when the monotone
    orders rho above sigma).
    """

    majorization: str
    family: str
    cone_orders: dict
    gaps: dict


def _verdict_from_slacks(fwd: list, bwd: list) -> str:
    ok_f = all(v >= -ORD_TOL for v in fwd)
    ok_b = all(v >= -ORD_TOL for v in bwd)
    if ok_f and ok_b:
        return "equal"
    if ok_f:
        return "forward"
    if ok_b:
        return "backward"
    return "incomparable"


def _msequence_gap(rho: Spectrum, sigma: Spectrum, n: int) -> float:
    # Schur concavity: rho above sigma iff M^(n)(rho) <= M^(n)(sigma)
    return shifted_moment(sigma, n) - shifted_moment(rho, n)


def _extremal_gap(rho: Spectrum, sigma: Spectrum, n: int) -> float:
    # Schur convexity of P^(n)_E: rho above sigma iff the minimized slack >= 0.
    # A degenerate denominator here means a lower-degree monotone already
    # ordered the pair the other way, so -inf (certainly not forward) is safe.
    if n == 1:
        return entropy(sigma) - entropy(rho)
    if n == 2:
        return p2_extremal(rho) - p2_extremal(sigma)
    try:
        if n == 3:
            return inequality3_slack(rho, sigma).slack
        if n == 4:
            return inequality4_slack(rho, sigma).slack
    except DegenerateDenominator:
        return -np.inf
    return optimized_extremal_slack(rho, sigma, n).slack


def cone_verdict(
    rho: Spectrum,
    sigma: Spectrum,
    nmax: int,
    family: str = "msequence",
    include_higher: bool = False,
) -> OrderVerdict:
    """Compare the degree-<=nmax cone order with the majorization verdict.

    The extremal family uses closed forms at degrees 1-2 and the optimized
    inequality slacks at 3-4; degrees >= 5 go through the root-vector search
    and are only evaluated when ``include_higher`` is set (cost).
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if nmax < 1 or nmax > 6:
        raise ValueError("nmax must be in 1..6")
    gap = _msequence_gap if family == "msequence" else _extremal_gap
    degrees = range(1, nmax + 1)
    if family == "extremal" and not include_higher:
        degrees = range(1, min(nmax, 4) + 1)
    fwd_gaps = {}
    bwd_gaps = {}
    for n in degrees:
        fwd_gaps[n] = gap(rho, sigma, n)
        bwd_gaps[n] = gap(sigma, rho, n)
    cone_orders = {}
    for n in fwd_gaps:
        fwd = [fwd_gaps[k] for k in fwd_gaps if k <= n]
        bwd = [bwd_gaps[k] for k in bwd_gaps if k <= n]
        cone_orders[n] = _verdict_from_slacks(fwd, bwd)
    return OrderVerdict(
        majorization=majorization_verdict(rho, sigma),
        family=family,
        cone_orders=cone_orders,
        gaps=fwd_gaps,
    )


@dataclass(frozen=True)
class CensusResult:
    """Confusion-matrix counts keyed '<majorization>|<cone>'. Deterministic per seed."""

    dim: int
    samples: int
    seed: int
    nmax: int
    family: str
    counts: dict

    def count(self, majorization: str, cone: str) -> int:
        return self.counts.get(f"{majorization}|{cone}", 0)

    def cone_ordered_but_incomparable(self) -> int:
        return self.count("incomparable", "forward") + self.count("incomparable", "backward")

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "samples": self.samples,
            "seed": self.seed,
            "nmax": self.nmax,
            "family": self.family,
            "counts": {k: self.counts[k] for k in sorted(self.counts)},
        }


def order_census(
    dim: int,
    samples: int,
    seed: int = 42,
    nmax: int = 2,
    family: str = "msequence",
) -> CensusResult:
    """Sample spectrum pairs uniformly from the simplex and tabulate verdicts.

    Dirichlet(1) sampling keeps the census an unbiased, seed-reproducible
    baseline.  Soundness (majorization forward implies cone forward) holds on
    every sampled pair; a violation would indicate a monotone bug.
    """
    if dim > 8:
        raise BudgetExceeded("census supports dim <= 8")
    if samples > 1_000_000:
        raise BudgetExceeded("census supports at most 1e6 samples")
    rng = np.random.default_rng(seed)
    counts: dict = {}
    for _ in range(samples):
        rho = Spectrum(rng.dirichlet(np.ones(dim)))
        sigma = Spectrum(rng.dirichlet(np.ones(dim)))
        v = cone_verdict(rho, sigma, nmax, family)
        key = f"{v.majorization}|{v.cone_orders[max(v.cone_orders)]}"
        counts[key] = counts.get(key, 0) + 1
    return CensusResult(dim=dim, samples=samples, seed=seed, nmax=nmax, family=family, counts=counts)
