"""Free-fermion chain simulator for the two critical models.

The hopping ('xx') chain is number conserving: a state is a set of filled
momentum modes q_k = 2 pi k / N and the block data is the ell x ell
correlation matrix C_jk = <c+_j c_k>.  The critical transverse-field ('ising')
chain is a BdG model diagonalized in the antiperiodic (half-integer momentum)
sector; a state is a set of occupied Bogoliubov quasiparticle modes and the
block data is the 2ell x 2ell Nambu correlation matrix whose eigenvalues come
in (nu, 1-nu) pairs.

Entanglement quantities are assembled from the single-particle occupations nu
by cumulant additivity over the mode tensor factorization, never from the
2^ell many-body spectrum (which only the small-block test oracles touch).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .monotones import cumulants_from_moments, moments_from_cumulants

NU_CLAMP = 1e-9       # admissible rounding window around [0, 1]
PURE_MODE_TOL = 1e-12  # modes this close to 0/1 contribute nothing

MODELS = ("xx", "ising")
STATES = ("gs", "current", "psi")


class ChainError(ValueError):
    """Invalid chain description."""


class BlockTooLarge(ChainError):
    pass


class UnsupportedCombination(ChainError):
    """Requested preset state does not exist for this model."""


class NoConvergence(ArithmeticError):
    """Jacobi sweep budget exhausted."""


@dataclass(frozen=True)
class ChainSpec:
    """Periodic chain description: model, size, occupied modes, block length.

    ``occupation`` indexes momentum modes 0..N-1.  For the hopping chain these
    are filled c-fermion momenta q = 2 pi k / N; for the critical
    transverse-field chain they are occupied Bogoliubov modes at the
    antiperiodic momenta q = 2 pi (k + 1/2) / N.
    """

    model: str
    n_sites: int
    occupation: frozenset
    block: int

    def __post_init__(self):
        if self.model not in MODELS:
            raise ChainError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.n_sites < 2:
            raise ChainError("need at least 2 sites")
        if not (1 <= self.block < self.n_sites):
            raise BlockTooLarge(f"block must satisfy 1 <= ell < N, got {self.block}")
        occ = frozenset(int(k) for k in self.occupation)
        if any(not (0 <= k < self.n_sites) for k in occ):
            raise ChainError("momentum indices must lie in 0..N-1")
        object.__setattr__(self, "occupation", occ)


@dataclass(frozen=True)
class BlockOccupations:
    """Single-particle occupations of a block, descending in [0, 1]."""

    nus: tuple

    def __post_init__(self):
        arr = np.asarray(self.nus, dtype=float)
        if np.any(arr < -NU_CLAMP) or np.any(arr > 1.0 + NU_CLAMP):
            raise ChainError("occupation outside the admissible window around [0, 1]")
        arr = np.clip(arr, 0.0, 1.0)
        object.__setattr__(self, "nus", tuple(np.sort(arr)[::-1]))

    @property
    def size(self) -> int:
        return len(self.nus)


# ---------------------------------------------------------------------------
# correlation matrices


def _toeplitz_from_differences(g: np.ndarray, ell: int) -> np.ndarray:
    """Matrix M[j, k] = g[(k - j) + ell - 1] from difference samples."""
    idx = np.arange(ell)
    return g[(idx[None, :] - idx[:, None]) + ell - 1]


def correlation_matrix(spec: ChainSpec) -> np.ndarray:
    """Block correlation matrix of the chain state.

    xx:    ell x ell Hermitian C with C_jk = (1/N) sum_{q in occ} e^{i q (k-j)}.
    ising: 2ell x 2ell Hermitian Nambu matrix [[C, -conj(F)], [F, I - C^T]]
           built from the Bogoliubov occupations of the critical chain.
    """
    N = spec.n_sites
    ell = spec.block
    deltas = np.arange(-(ell - 1), ell)
    if spec.model == "xx":
        if not spec.occupation:
            return np.zeros((ell, ell), dtype=complex)
        q = 2.0 * np.pi * np.array(sorted(spec.occupation)) / N
        g = np.exp(1j * np.outer(deltas, q)).sum(axis=1) / N
        return _toeplitz_from_differences(g, ell)

    # critical transverse-field chain, antiperiodic sector
    k = np.arange(N)
    q = 2.0 * np.pi * (k + 0.5) / N
    q = np.where(q > np.pi, q - 2.0 * np.pi, q)  # fold to (-pi, pi)
    occ = np.zeros(N, dtype=bool)
    occ[list(spec.occupation)] = True
    occ_minus = occ[N - 1 - k]  # -q_k is mode N-1-k
    abs_sin = np.abs(np.sin(q / 2.0))
    v2 = 0.5 * (1.0 - abs_sin)
    u2 = 0.5 * (1.0 + abs_sin)
    uv = 0.5 * np.sign(q) * np.cos(q / 2.0)
    w_c = u2 * occ + v2 * (1.0 - occ_minus)
    w_f = -1j * uv * (1.0 - occ.astype(float) - occ_minus.astype(float))
    phases = np.exp(1j * np.outer(deltas, q))
    g_c = phases @ w_c / N
    g_f = phases @ w_f / N
    C = _toeplitz_from_differences(g_c, ell)            # C[j,k] = g_c[k-j]
    F = _toeplitz_from_differences(g_f, ell).T          # F[j,k] = g_f[j-k]
    eye = np.eye(ell)
    return np.block([[C, -F.conj()], [F, eye - C.T]])


# ---------------------------------------------------------------------------
# cyclic Jacobi Hermitian eigensolver


def jacobi_eigvalsh(mat: np.ndarray, rel_tol: float = 1e-12, max_sweeps: int = 40) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below rel_tol * ||A||;
    raises :class:`NoConvergence` if the sweep budget is exhausted.
    """
    a = np.array(mat, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ChainError("matrix must be square")
    if n == 1:
        return np.array([a[0, 0].real])
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n)
    diag_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a[diag_mask])
        if off <= rel_tol * scale:
            return np.sort(np.diagonal(a).real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if tau == 0.0:
                    t = 1.0
                elif abs(tau) > 1e8:  # sqrt(1 + tau^2) ~ |tau|, avoids overflow
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    raise NoConvergence(f"off-diagonal norm not below {rel_tol:g}*||A|| after {max_sweeps} sweeps")


def block_occupations(corr: np.ndarray, rel_tol: float = 1e-12, max_sweeps: int = 40) -> BlockOccupations:
    """Eigenvalues of a block correlation matrix, clamped to [0, 1], descending."""
    return BlockOccupations(nus=tuple(jacobi_eigvalsh(corr, rel_tol, max_sweeps)))


def state_occupations(spec: ChainSpec) -> BlockOccupations:
    """BlockOccupations of length ell for either model.

    The Nambu spectrum of the BdG model pairs as {nu, 1-nu}; keeping the upper
    member of each pair fixes the per-mode two-level spectrum, which is all
    the entanglement data needs.
    """
    occ = block_occupations(correlation_matrix(spec))
    if spec.model == "ising":
        return BlockOccupations(nus=occ.nus[: spec.block])
    return occ


# ---------------------------------------------------------------------------
# entanglement data from mode occupations


@dataclass(frozen=True)
class FermiBlockStats:
    """Entanglement data of a block: cumulants, moments, shifted moments, Renyis."""

    order: int
    moments: tuple
    cumulants: tuple
    shifted: tuple      # M^(n)(.; n-1) for n = 1..order
    renyi: dict         # alpha -> S^(alpha)

    @property
    def entropy(self) -> float:
        return self.cumulants[0]

    @property
    def capacity(self) -> float:
        return self.cumulants[1] if self.order >= 2 else 0.0


def _mode_moments(nu: float, nmax: int) -> np.ndarray:
    lam = np.array([nu, 1.0 - nu])
    u = -np.log(lam)
    return np.array([float(np.dot(lam, u**k)) for k in range(1, nmax + 1)])


def ff_stats(occ: BlockOccupations, nmax: int = 4, alphas: tuple = (2, 3)) -> FermiBlockStats:
    """Assemble block entanglement data by summing per-mode cumulants.

    Each mode with occupation nu contributes the two-outcome spectrum
    (nu, 1-nu); cumulants add over the tensor factorization, so the block
    cumulants are the mode sums, converted back to moments and to the shifted
    moments M^(n)(.; n-1).  Modes within PURE_MODE_TOL of 0 or 1 contribute
    exactly zero (limit of x ln^k x).
    """
    if nmax < 1 or nmax > 8:
        raise ValueError("nmax must be in 1..8")
    total_c = np.zeros(nmax)
    renyi = {float(a): 0.0 for a in alphas}
    for nu in occ.nus:
        if nu < PURE_MODE_TOL or nu > 1.0 - PURE_MODE_TOL:
            continue
        mu = _mode_moments(nu, nmax)
        total_c += cumulants_from_moments(mu)
        for a in renyi:
            renyi[a] += math.log(nu**a + (1.0 - nu) ** a) / (1.0 - a)
    mu_total = moments_from_cumulants(total_c)
    shifted = []
    for n in range(1, nmax + 1):
        b = float(n - 1)
        acc = 0.0
        for k in range(1, n + 1):
            acc += math.comb(n, k) * b ** (n - k) * mu_total[k - 1]
        shifted.append(acc)
    return FermiBlockStats(
        order=nmax,
        moments=tuple(mu_total),
        cumulants=tuple(total_c),
        shifted=tuple(shifted),
        renyi=renyi,
    )


# ---------------------------------------------------------------------------
# preset states


def _xx_ground_set(n_sites: int) -> list:
    if n_sites % 2 != 0:
        raise UnsupportedCombination("half filling needs an even number of sites")
    m = n_sites // 2
    lo = -((m - 1) // 2)
    return [(lo + j) % n_sites for j in range(m)]


def preset_state(model: str, n_sites: int, which: str) -> frozenset:
    """Occupation sets of the named states.

    xx/gs:      half-filled Fermi sea, m = N/2 consecutive momenta centered on
                zero (Fermi momentum pi/2).
    xx/current: Fermi sea with the highest filled momentum moved to the lowest
                unfilled one (single particle-hole at one Fermi point); the
                continuum image is the current state, exponent gamma = 1.
    ising/gs:   Bogoliubov vacuum of the antiperiodic sector.
    ising/psi:  one quasiparticle in the lowest antiperiodic mode q = pi/N;
                the continuum image is the fermion state, gamma = 1/2.  The
                recipe is validated against the gamma = 1/2 scaling curve, not
                asserted.
    """
    if model == "xx":
        if which == "gs":
            return frozenset(_xx_ground_set(n_sites))
        if which == "current":
            m = n_sites // 2
            sea = _xx_ground_set(n_sites)
            hi = max(((k + n_sites // 2) % n_sites) - n_sites // 2 for k in sea)
            sea.remove(hi % n_sites)
            sea.append((hi + 1) % n_sites)
            return frozenset(sea)
        raise UnsupportedCombination(f"state {which!r} not defined for the hopping chain")
    if model == "ising":
        if which == "gs":
            return frozenset()
        if which == "psi":
            return frozenset({0})
        raise UnsupportedCombination(f"state {which!r} not defined for the critical chain")
    raise ChainError(f"model must be one of {MODELS}, got {model!r}")


def chain_records(model: str, n_sites: int, ells, states, nmax: int = 4) -> list:
    """Sweep records with the CSV schema
    model,N,ell,state,S,C,C3,C4,M2,M3,renyi2,renyi3."""
    out = []
    for state in states:
        occ_set = preset_state(model, n_sites, state)
        for ell in ells:
            spec = ChainSpec(model=model, n_sites=n_sites, occupation=occ_set, block=int(ell))
            stats = ff_stats(state_occupations(spec), nmax=max(nmax, 4))
            out.append(
                {
                    "model": model,
                    "N": n_sites,
                    "ell": int(ell),
                    "state": state,
                    "S": stats.cumulants[0],
                    "C": stats.cumulants[1],
                    "C3": stats.cumulants[2],
                    "C4": stats.cumulants[3],
                    "M2": stats.shifted[1],
                    "M3": stats.shifted[2],
                    "renyi2": stats.renyi[2.0],
                    "renyi3": stats.renyi[3.0],
                }
            )
    return out
