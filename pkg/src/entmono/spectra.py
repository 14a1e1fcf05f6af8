"""Probability spectra, majorization, and sigma-majorization decision procedures.

A :class:`Spectrum` is a validated probability vector (the eigenvalues of a
density matrix).  Storage order is caller-defined: comparison operations sort
internally, while :class:`CommutingPair` relies on entry-wise pairing in a
shared eigenbasis and must never be resorted independently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

NEG_TOL = -1e-14       # entries below this are rejected outright
SUM_TOL = 1e-12        # admissible deviation of sum(probs) from 1
RESCALE_TOL = 1e-9     # normalize() rescales silently only within this deviation
CMP_TOL = 1e-12        # absolute slack in all majorization comparisons


class SpectrumError(ValueError):
    """Invalid spectral data."""


class NegativeEntry(SpectrumError):
    """An entry is more negative than the admissible rounding window."""


class NotNormalizable(SpectrumError):
    """Entries cannot be rescaled into a probability vector."""


class DimMismatch(SpectrumError):
    """Operands have incompatible dimensions."""


class RankDeficientReference(SpectrumError):
    """A reference spectrum has a (numerically) zero eigenvalue."""


class NotStochastic(SpectrumError):
    """Matrix is not row-stochastic."""


class Spectrum:
    """Validated probability vector.

    Entries must be >= ``NEG_TOL`` (tiny negatives are clamped to zero) and
    sum to 1 within ``SUM_TOL``.  Instances are immutable; ``probs`` is a
    read-only numpy array.
    """

    __slots__ = ("_p",)

    def __init__(self, probs):
        p = np.array(probs, dtype=float).reshape(-1)
        if p.size < 1:
            raise SpectrumError("spectrum needs at least one entry")
        if np.any(p < NEG_TOL):
            raise NegativeEntry(f"entry {p.min():.3e} below tolerance {NEG_TOL:.0e}")
        np.clip(p, 0.0, None, out=p)
        total = p.sum()
        if abs(total - 1.0) > SUM_TOL:
            raise NotNormalizable(
                f"entries sum to {total!r}, more than {SUM_TOL:.0e} away from 1; "
                "use normalize() for raw data"
            )
        p.flags.writeable = False
        self._p = p

    @property
    def probs(self) -> np.ndarray:
        return self._p

    @property
    def dim(self) -> int:
        return self._p.size

    def sorted_desc(self) -> np.ndarray:
        return np.sort(self._p)[::-1]

    def min_prob(self) -> float:
        return float(self._p.min())

    def __len__(self) -> int:
        return self._p.size

    def __iter__(self):
        return iter(self._p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self._p.shape == other._p.shape and bool(np.all(self._p == other._p))

    def __hash__(self):
        return hash(self._p.tobytes())

    def __repr__(self) -> str:
        body = ", ".join(f"{x:.6g}" for x in self._p)
        return f"Spectrum([{body}])"


def normalize(raw, force: bool = False) -> Spectrum:
    """Clamp tiny negatives and rescale ``raw`` to a unit-sum :class:`Spectrum`.

    Rescaling is silent only when the raw sum deviates from 1 by at most
    ``RESCALE_TOL``; a larger deviation raises :class:`NotNormalizable`
    unless ``force`` is given.
    """
    p = np.array(raw, dtype=float).reshape(-1)
    if p.size < 1:
        raise SpectrumError("spectrum needs at least one entry")
    if np.any(p < NEG_TOL):
        raise NegativeEntry(f"entry {p.min():.3e} below tolerance {NEG_TOL:.0e}")
    np.clip(p, 0.0, None, out=p)
    total = p.sum()
    if total <= 0.0:
        raise NotNormalizable("entries sum to zero")
    if abs(total - 1.0) > RESCALE_TOL and not force:
        raise NotNormalizable(
            f"sum deviates from 1 by {abs(total - 1.0):.3e} > {RESCALE_TOL:.0e}; "
            "pass force=True to rescale anyway"
        )
    return Spectrum(p / total)


def _padded_desc(a: Spectrum, b: Spectrum):
    # Zero-padding the lower-rank state is the standard convention for
    # comparing states of different rank.
    d = max(a.dim, b.dim)
    pa = np.zeros(d)
    pb = np.zeros(d)
    pa[: a.dim] = a.sorted_desc()
    pb[: b.dim] = b.sorted_desc()
    return pa, pb


def majorizes(a: Spectrum, b: Spectrum, tol: float = CMP_TOL) -> bool:
    """True iff every descending partial sum of ``a`` dominates that of ``b``.

    Spectra of unequal dimension are zero-padded.  Each comparison carries an
    absolute slack ``tol``, so the relation is reflexive.
    """
    pa, pb = _padded_desc(a, b)
    return bool(np.all(np.cumsum(pa) >= np.cumsum(pb) - tol))


def majorization_verdict(a: Spectrum, b: Spectrum, tol: float = CMP_TOL) -> str:
    """One of ``'forward'`` (a majorizes b), ``'backward'``, ``'equal'``, ``'incomparable'``."""
    fwd = majorizes(a, b, tol)
    bwd = majorizes(b, a, tol)
    if fwd and bwd:
        return "equal"
    if fwd:
        return "forward"
    if bwd:
        return "backward"
    return "incomparable"


@dataclass(frozen=True)
class CommutingPair:
    """Two spectra paired entry-wise in a shared eigenbasis ordering.

    Entry ``i`` of ``r`` and ``s`` refers to the same eigenvector, so the
    pair must never be sorted independently.
    """

    r: Spectrum
    s: Spectrum

    def __post_init__(self):
        if self.r.dim != self.s.dim:
            raise DimMismatch(f"r has dim {self.r.dim}, s has dim {self.s.dim}")

    @property
    def dim(self) -> int:
        return self.r.dim

    @property
    def s_min(self) -> float:
        return self.s.min_prob()

    def require_full_rank(self):
        if self.s.min_prob() <= 0.0:
            raise RankDeficientReference("reference spectrum has a zero eigenvalue")


def _l1_deviation(r: np.ndarray, s: np.ndarray, t: np.ndarray) -> np.ndarray:
    # sum_i |r_i - t s_i| for each breakpoint t; rows index t.
    return np.abs(r[None, :] - np.outer(t, s)).sum(axis=1)


def sigma_majorizes(pair1: CommutingPair, pair2: CommutingPair, tol: float = CMP_TOL) -> bool:
    """Decide (r1,s1) >= (r2,s2) in the relative-majorization sense.

    Uses the L1 breakpoint criterion: both t -> sum_i |r_i - t s_i| curves are
    piecewise linear and convex, so comparing them at t = 0 and at every ratio
    r_i/s_i of either pair decides dominance everywhere on t >= 0.

    The criterion is guaranteed for the shared-reference case (s1 = s2
    entry-wise); distinct full-rank references are accepted but only the
    shared-reference semantics are covered by the decision guarantee.
    """
    if pair1.dim != pair2.dim:
        raise DimMismatch(f"pairs have dims {pair1.dim} and {pair2.dim}")
    pair1.require_full_rank()
    pair2.require_full_rank()
    r1, s1 = pair1.r.probs, pair1.s.probs
    r2, s2 = pair2.r.probs, pair2.s.probs
    t = np.concatenate(([0.0], r1 / s1, r2 / s2))
    return bool(np.all(_l1_deviation(r1, s1, t) >= _l1_deviation(r2, s2, t) - tol))


def apply_stochastic(pair: CommutingPair, T: np.ndarray) -> CommutingPair:
    """Apply a row-stochastic matrix to both members of a commuting pair.

    Computes ``(r T, s T)`` with row-vector convention.  The output pair is
    sigma-majorized by the input pair; with bistochastic ``T`` and uniform
    reference the output spectrum is majorized by the input spectrum.
    """
    T = np.asarray(T, dtype=float)
    d = pair.dim
    if T.shape != (d, d):
        raise NotStochastic(f"expected a {d}x{d} matrix, got {T.shape}")
    if np.any(T < NEG_TOL):
        raise NotStochastic("negative entries")
    if np.any(np.abs(T.sum(axis=1) - 1.0) > SUM_TOL):
        raise NotStochastic("rows do not sum to 1")
    T = np.clip(T, 0.0, None)
    return CommutingPair(Spectrum(pair.r.probs @ T), Spectrum(pair.s.probs @ T))


# ---------------------------------------------------------------------------
# seeded samplers (test utilities, also used by the order census)

def random_spectrum(dim: int, rng: np.random.Generator) -> Spectrum:
    """Uniform sample from the probability simplex (symmetric Dirichlet(1))."""
    return Spectrum(rng.dirichlet(np.ones(dim)))


def random_bistochastic(dim: int, rng: np.random.Generator, n_perm: int | None = None) -> np.ndarray:
    """Convex combination of random permutation matrices (exactly bistochastic)."""
    if n_perm is None:
        n_perm = dim + 2
    w = rng.dirichlet(np.ones(n_perm))
    T = np.zeros((dim, dim))
    for wk in w:
        perm = rng.permutation(dim)
        T[np.arange(dim), perm] += wk
    return T


def random_stochastic(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Row-stochastic matrix with Dirichlet(1) rows."""
    return rng.dirichlet(np.ones(dim), size=dim)


# ---------------------------------------------------------------------------
# file readers

def parse_spectrum_text(text: str) -> Spectrum:
    """Parse either a JSON array or a one-real-per-line listing ('#' comments)."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        if not isinstance(data, list):
            raise SpectrumError("JSON spectrum must be an array of numbers")
        return normalize(data)
    vals = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            vals.append(float(body))
    if not vals:
        raise SpectrumError("no numeric entries found")
    return normalize(vals)


def read_spectrum(path) -> Spectrum:
    """Read a spectrum file (JSON array or one real per line)."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spectrum_text(fh.read())
