"""Shared test oracles: exact Fock-space constructions for small chains and
seeded generators for majorizing / sigma-majorizing instance pairs."""

from __future__ import annotations

import numpy as np

from entmono.spectra import (
    CommutingPair,
    Spectrum,
    apply_stochastic,
    random_bistochastic,
    random_spectrum,
    random_stochastic,
)

# ---------------------------------------------------------------------------
# Jordan-Wigner Fock-space machinery (exact oracle for N <= 8 chains)


def jw_annihilators(n_sites: int) -> list:
    """Dense 2^N matrices of the fermionic annihilators c_j."""
    lower = np.array([[0, 1], [0, 0]], dtype=complex)  # |1> -> |0>
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    eye = np.eye(2, dtype=complex)
    ops = []
    for j in range(n_sites):
        mats = [sz] * j + [lower] + [eye] * (n_sites - j - 1)
        m = mats[0]
        for x in mats[1:]:
            m = np.kron(m, x)
        ops.append(m)
    return ops


def fock_vacuum(n_sites: int) -> np.ndarray:
    vac = np.zeros(2**n_sites, dtype=complex)
    vac[0] = 1.0
    return vac


def momentum_annihilator(c: list, q: float) -> np.ndarray:
    n = len(c)
    return sum(np.exp(-1j * q * j) * c[j] for j in range(n)) / np.sqrt(n)


def xx_state_vector(n_sites: int, occupation) -> np.ndarray:
    """Slater determinant with the given momentum modes filled."""
    c = jw_annihilators(n_sites)
    psi = fock_vacuum(n_sites)
    for k in sorted(occupation):
        q = 2.0 * np.pi * k / n_sites
        psi = momentum_annihilator(c, q).conj().T @ psi
    return psi / np.linalg.norm(psi)


def ising_hamiltonian_ap(c: list) -> np.ndarray:
    """Critical transverse-field chain with antiperiodic fermion boundary."""
    n = len(c)
    h = np.zeros_like(c[0])
    for j in range(n):
        sgn = -1.0 if j == n - 1 else 1.0
        jp = (j + 1) % n
        h += -0.5 * sgn * (c[j].conj().T @ c[jp] + c[j].conj().T @ c[jp].conj().T)
        h += -0.5 * sgn * (c[jp].conj().T @ c[j] + c[jp] @ c[j])
        h += c[j].conj().T @ c[j]
    return h


def ising_state_vector(n_sites: int, occupation) -> np.ndarray:
    """Bogoliubov vacuum of the antiperiodic sector, with quasiparticles added.

    Mode index k occupies the antiperiodic momentum q = 2 pi (k + 1/2) / N
    folded to (-pi, pi); the quasiparticle creator is
    eta+_q = u_q c+_q + i v_q c_{-q}.
    """
    c = jw_annihilators(n_sites)
    h = ising_hamiltonian_ap(c)
    _, vecs = np.linalg.eigh(h)
    psi = vecs[:, 0]
    for k in sorted(occupation):
        q = 2.0 * np.pi * (k + 0.5) / n_sites
        if q > np.pi:
            q -= 2.0 * np.pi
        abs_sin = abs(np.sin(q / 2.0))
        u = np.sqrt(0.5 * (1.0 + abs_sin))
        v = 0.5 * np.sign(q) * np.cos(q / 2.0) / u
        eta_dag = u * momentum_annihilator(c, q).conj().T + 1j * v * momentum_annihilator(c, -q)
        psi = eta_dag @ psi
        psi = psi / np.linalg.norm(psi)
    return psi


def reduced_block_spectrum(psi: np.ndarray, n_sites: int, ell: int) -> np.ndarray:
    """Eigenvalues of rho_A for the leading contiguous block, descending.

    The Jordan-Wigner string is local on leading blocks, so the qubit partial
    trace equals the fermionic one.
    """
    m = psi.reshape((2**ell, 2 ** (n_sites - ell)))
    rho = m @ m.conj().T
    return np.sort(np.linalg.eigvalsh(rho))[::-1]


def block_one_body(psi: np.ndarray, n_sites: int, ell: int) -> np.ndarray:
    """Exact <c+_j c_k> on the leading block from a many-body state."""
    c = jw_annihilators(n_sites)
    return np.array(
        [[psi.conj() @ (c[j].conj().T @ c[k] @ psi) for k in range(ell)] for j in range(ell)]
    )


# ---------------------------------------------------------------------------
# seeded instance generators


def majorizing_pair(dim: int, rng: np.random.Generator) -> tuple[Spectrum, Spectrum]:
    """(rho, sigma) with rho majorizing sigma, via a bistochastic mixing."""
    rho = random_spectrum(dim, rng)
    sigma = Spectrum(rho.probs @ random_bistochastic(dim, rng))
    return rho, sigma


def shared_reference_transition(
    dim: int, rng: np.random.Generator
) -> tuple[CommutingPair, CommutingPair]:
    """Pairs (before, after) with after = before . T for row-stochastic T.

    The reference is kept full rank by mixing it toward uniform.
    """
    r = random_spectrum(dim, rng)
    s_raw = random_spectrum(dim, rng)
    s = Spectrum(0.8 * s_raw.probs + 0.2 / dim)
    before = CommutingPair(r, s)
    after = apply_stochastic(before, random_stochastic(dim, rng))
    return before, after


def kron_spectrum(a: Spectrum, b: Spectrum) -> Spectrum:
    return Spectrum(np.outer(a.probs, b.probs).ravel())
