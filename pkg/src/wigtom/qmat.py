"""Dense complex matrix helpers sized for small Hilbert spaces.

Plain numpy arrays are the carrier type throughout the package; the
functions here add the quantum-specific conveniences (adjoints, tensor
products, Hermitian matrix exponentials, validated density matrices).
"""
import numpy as np

from .errors import DimensionMismatch, NotHermitian

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10


def dagger(m):
    """Conjugate transpose."""
    return np.conj(np.asarray(m)).T


def is_hermitian(m, tol=HERMITICITY_TOL):
    m = np.asarray(m)
    return m.shape[0] == m.shape[1] and np.max(np.abs(m - dagger(m))) <= tol


def is_unitary(m, tol=1e-10):
    m = np.asarray(m)
    return np.max(np.abs(dagger(m) @ m - np.eye(m.shape[0]))) <= tol


def tensor(a, b):
    """Kronecker product; the first factor varies slowest."""
    return np.kron(np.asarray(a), np.asarray(b))


def frobenius_inner(a, b):
    """Frobenius inner product Tr[a^dagger b]."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    return complex(np.vdot(a, b))


def expm_hermitian_generator(h, t):
    """exp(-i t h) for Hermitian h, via spectral decomposition.

    Every unitary in this package (kicks, twists, controlled point
    operators) comes from a small Hermitian generator, so there is no
    need for series expansions or step-size control.
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h, tol=1e-10):
        raise NotHermitian("generator deviates from Hermiticity beyond 1e-10")
    evals, evecs = np.linalg.eigh(h)
    u = (evecs * np.exp(-1j * t * evals)) @ dagger(evecs)
    assert is_unitary(u), "spectral exponential lost unitarity"
    return u


def projector(psi):
    """Rank-one density matrix |psi><psi| of a normalized state vector."""
    psi = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"state vector norm {norm!r} is not 1")
    return np.outer(psi, psi.conj())


def density_matrix(m):
    """Validate m as a density matrix and return it symmetrized.

    The input must be Hermitian within 1e-12 (max entry deviation); it
    is then replaced by (m + m^dagger)/2, which must have unit trace
    within 1e-12 and eigenvalues >= -1e-10.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"density matrix must be square, got {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("density matrix contains non-finite entries")
    if not is_hermitian(m):
        raise NotHermitian("matrix deviates from Hermiticity beyond 1e-12")
    m = (m + dagger(m)) / 2
    tr = np.trace(m).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"trace {tr!r} is not 1 within {TRACE_TOL}")
    lo = np.linalg.eigvalsh(m)[0]
    if lo < EIGENVALUE_FLOOR:
        raise ValueError(f"negative eigenvalue {lo!r} below {EIGENVALUE_FLOOR}")
    return m
