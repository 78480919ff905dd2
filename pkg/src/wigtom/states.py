"""State factories: basis, Bell, spin coherent, harmonic, pseudopure.

Pure states are returned as normalized complex amplitude vectors;
density matrices as validated square arrays.
"""
import numpy as np

from .errors import IndexOutOfRange, InvalidEpsilon
from .qmat import density_matrix, projector, tensor


def basis_state(n, dim):
    """Computational basis vector |n> in dimension N."""
    if not 0 <= n < dim:
        raise IndexOutOfRange(f"basis index {n} outside 0..{dim - 1}")
    psi = np.zeros(dim, dtype=complex)
    psi[n] = 1.0
    return psi


def bell_state():
    """(|00> + |11>)/sqrt(2) on two qubits (dimension 4)."""
    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1 / np.sqrt(2)
    return psi


def spin_coherent(theta, phi):
    """Qubit spin coherent state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""
    return np.array([np.cos(theta / 2),
                     np.exp(1j * phi) * np.sin(theta / 2)], dtype=complex)


def two_qubit_scs(theta, phi):
    """Product spin coherent state |theta,phi><theta,phi| ^ tensor 2 (dim 4)."""
    single = projector(spin_coherent(theta, phi))
    return tensor(single, single)


def harmonic_state(j, dim):
    """The j-th momentum basis state: amplitudes e^{i 2 pi n j / N} / sqrt(N).

    Equal magnitude on every computational basis state; its Wigner
    quadrant has a single nonzero column, at p = 2j mod N (the full-grid
    momentum line p = 2j folded into the quadrant).
    """
    if not 0 <= j < dim:
        raise IndexOutOfRange(f"harmonic index {j} outside 0..{dim - 1}")
    n = np.arange(dim)
    return np.exp(2j * np.pi * n * j / dim) / np.sqrt(dim)


def randomized_harmonic(j, dim, eta, seed):
    """Harmonic state with amplitude magnitudes jittered by r_n ~ U[1-eta, 1+eta].

    The draws are i.i.d. per basis index from a generator seeded with
    `seed`, so every state is replayable. eta=0 reproduces
    harmonic_state(j, dim) up to normalization rounding.
    """
    if not 0 <= j < dim:
        raise IndexOutOfRange(f"harmonic index {j} outside 0..{dim - 1}")
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"randomization strength eta={eta!r} outside [0, 1]")
    rng = np.random.default_rng(seed)
    r = rng.uniform(1 - eta, 1 + eta, size=dim)
    amps = r * np.exp(2j * np.pi * np.arange(dim) * j / dim)
    return amps / np.linalg.norm(amps)


def pseudopure(rho_pure, epsilon):
    """Mixture (1 - eps) * I/N + eps * rho_pure."""
    if not 0.0 <= epsilon <= 1.0:
        raise InvalidEpsilon(f"purity factor epsilon={epsilon!r} outside [0, 1]")
    rho = np.asarray(rho_pure, dtype=complex)
    dim = rho.shape[0]
    return density_matrix((1 - epsilon) * np.eye(dim) / dim + epsilon * rho)
