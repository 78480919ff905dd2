"""Even-dimensional discrete Wigner phase space.

A Hilbert space of dimension N is mapped onto a 2N x 2N grid of
half-integer phase-space points. Only the N x N quadrant with both
coordinates in {0..N-1} is independent ("the quadrant" below); the
other three quadrants follow from a sign rule, so a Wigner function is
stored as a real N x N array W(q, p).

The point operators are

    A(q, p) = (1/2N) * shift^q * reflection * phase^(-p) * e^{i pi p q / N}

built from the cyclic position shift U|n> = |n+1 mod N>, the reflection
|n> -> |-n mod N>, and the momentum shift V = diag(e^{i 2 pi n / N}).
Each A(q, p) is Hermitian, W(q, p) = Tr[A(q, p) rho] is real, and the
family is orthogonal: Tr[A A'] = delta / 4N over the quadrant.
"""
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidDimension,
    NonNegligibleImaginaryPart,
    ReconstructionNotPositive,
)
from .qmat import dagger, density_matrix, is_unitary

IMAG_TRUNCATE = 1e-10   # residues below this are silently dropped
IMAG_REJECT = 1e-8      # residues above this signal a broken frame/state
RECONSTRUCT_EIG_FLOOR = -1e-8


def shift_matrix(dim):
    """Cyclic position translation U with U|n> = |n+1 mod N>."""
    u = np.zeros((dim, dim), dtype=complex)
    u[(np.arange(dim) + 1) % dim, np.arange(dim)] = 1.0
    return u


def phase_matrix(dim):
    """Momentum translation V = diag(e^{i 2 pi n / N})."""
    return np.diag(np.exp(2j * np.pi * np.arange(dim) / dim))


def reflection_matrix(dim):
    """Parity operator R with R|n> = |-n mod N>."""
    r = np.zeros((dim, dim), dtype=complex)
    r[(dim - np.arange(dim)) % dim, np.arange(dim)] = 1.0
    return r


def fourier_matrix(dim):
    """Discrete Fourier transform, entry (n, k) = e^{i 2 pi n k / N} / sqrt(N).

    Columns are the momentum basis states expressed in the position basis.
    """
    n = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(n, n) / dim) / np.sqrt(dim)


@dataclass(frozen=True)
class PhaseSpaceFrame:
    """Immutable bundle of the operators defining one phase space.

    point_ops has shape (N, N, N, N): point_ops[q, p] is the N x N
    Hermitian operator A(q, p) for the quadrant cell (q, p).
    """
    dim: int
    qft: np.ndarray
    shift: np.ndarray
    phase: np.ndarray
    reflection: np.ndarray
    point_ops: np.ndarray


def build_frame(dim):
    """Construct all quadrant point operators for Hilbert dimension N.

    The closed form A(q,p)[m,n] = e^{i pi p q/N} e^{-i 2 pi n p/N}/(2N)
    for m = (q - n) mod N is used instead of repeated matrix products;
    tests cross-check it against brute-force operator powers.

    N must be an integer >= 2. The grid-doubling conventions target even
    N (the typical dimensions here are 4 and 8).
    """
    if int(dim) != dim or dim < 2:
        raise InvalidDimension(f"Hilbert dimension must be an integer >= 2, got {dim!r}")
    dim = int(dim)
    n = np.arange(dim)
    ops = np.zeros((dim, dim, dim, dim), dtype=complex)
    for q in range(dim):
        rows = (q - n) % dim
        for p in range(dim):
            ops[q, p][rows, n] = np.exp(1j * np.pi * p * (q - 2 * n) / dim) / (2 * dim)
    assert np.max(np.abs(ops - np.conj(np.swapaxes(ops, 2, 3)))) <= 1e-12, \
        "point operators lost Hermiticity"
    qft = fourier_matrix(dim)
    assert is_unitary(qft, tol=1e-12)
    return PhaseSpaceFrame(
        dim=dim,
        qft=qft,
        shift=shift_matrix(dim),
        phase=phase_matrix(dim),
        reflection=reflection_matrix(dim),
        point_ops=ops,
    )


def ensure_real(traces):
    """Strip imaginary residue from point-operator traces, or reject it.

    Exact Wigner values are real; residues above IMAG_REJECT indicate a
    construction bug rather than noise.
    """
    traces = np.asarray(traces)
    residue = np.max(np.abs(traces.imag))
    if residue > IMAG_REJECT:
        raise NonNegligibleImaginaryPart(
            f"imaginary residue {residue:.3e} exceeds {IMAG_REJECT}; "
            "the frame or the input state is broken")
    return np.array(traces.real)


def wigner_transform(frame, rho):
    """Full quadrant W(q, p) = Re Tr[A(q, p) rho] as an N x N real array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (frame.dim, frame.dim):
        raise DimensionMismatch(
            f"state shape {rho.shape} does not match frame dimension {frame.dim}")
    return ensure_real(np.einsum('qpij,ji->qp', frame.point_ops, rho))


def expand_full(quadrant):
    """Expand the N x N quadrant to the full 2N x 2N grid.

    W(q + sq*N, p + sp*N) = W(q, p) * (-1)^(sp*q + sq*p + sq*sp*N).
    """
    w = np.asarray(quadrant, dtype=float)
    dim = w.shape[0]
    q_sign = (-1.0) ** np.arange(dim)[:, None]   # (-1)^q as a column
    p_sign = (-1.0) ** np.arange(dim)[None, :]   # (-1)^p as a row
    both = q_sign * p_sign * (-1.0) ** dim
    return np.block([[w, w * q_sign], [w * p_sign, w * both]])


def fold_cell(dim, q, p):
    """Fold a full-grid cell into the quadrant.

    Returns (q0, p0, sign) with W(q, p) = sign * W(q0, p0) and
    (q0, p0) in the quadrant. Accepts 0 <= q, p < 2N.
    """
    if not (0 <= q < 2 * dim and 0 <= p < 2 * dim):
        raise IndexOutOfRange(
            f"cell ({q}, {p}) outside the 2N x 2N grid for N={dim}")
    sq, q0 = divmod(int(q), dim)
    sp, p0 = divmod(int(p), dim)
    sign = (-1.0) ** (sp * q0 + sq * p0 + sq * sp * dim)
    return q0, p0, sign


def marginals(quadrant):
    """Position and momentum probability vectors from the full grid.

    position[n] sums the full-grid line q = 2n; momentum[k] sums the
    line p = 2k. Odd lines of a valid state sum to zero and do not
    contribute probabilities.
    """
    full = expand_full(quadrant)
    dim = np.asarray(quadrant).shape[0]
    even = 2 * np.arange(dim)
    return full[even, :].sum(axis=1), full[:, even].sum(axis=0)


def wigner_fidelity(w1, w2):
    """Overlap Tr[rho1 rho2] computed in phase space: 4N * sum(W1 * W2)."""
    w1 = np.asarray(w1, dtype=float)
    w2 = np.asarray(w2, dtype=float)
    if w1.shape != w2.shape:
        raise DimensionMismatch(f"quadrant shapes {w1.shape} and {w2.shape} differ")
    return float(4 * w1.shape[0] * np.sum(w1 * w2))


@dataclass(frozen=True)
class Reconstruction:
    """Inverse-transform output, which may legitimately be unphysical.

    Pruned or hand-edited quadrants reconstruct to matrices with
    negative eigenvalues; those are returned flagged (physical=False)
    so they can still be analyzed. state() insists on physicality.
    """
    matrix: np.ndarray
    min_eigenvalue: float
    physical: bool

    def state(self):
        """The reconstruction as a validated density matrix."""
        if not self.physical:
            raise ReconstructionNotPositive(
                f"minimum eigenvalue {self.min_eigenvalue!r} is below "
                f"{RECONSTRUCT_EIG_FLOOR}")
        return density_matrix(self.matrix)


def reconstruct(frame, quadrant):
    """Invert the Wigner transform: rho = 4N * sum over the quadrant of W * A.

    (Equivalently rho = N * sum over the full grid; the sign rule makes
    each quadrant contribute equally.)
    """
    w = np.asarray(quadrant, dtype=float)
    if w.shape != (frame.dim, frame.dim):
        raise DimensionMismatch(
            f"quadrant shape {w.shape} does not match frame dimension {frame.dim}")
    m = 4 * frame.dim * np.einsum('qp,qpij->ij', w, frame.point_ops)
    m = (m + dagger(m)) / 2
    lo = float(np.linalg.eigvalsh(m)[0])
    return Reconstruction(matrix=m, min_eigenvalue=lo,
                          physical=lo >= RECONSTRUCT_EIG_FLOOR)


def matrix_to_csv(m):
    """CSV text for a real matrix: row q per line, comma-separated, no header."""
    m = np.asarray(m, dtype=float)
    return "".join(",".join(repr(float(x)) for x in row) + "\n" for row in m)


def quadrant_to_json_dict(quadrant):
    w = np.asarray(quadrant, dtype=float)
    return {"dim": int(w.shape[0]), "quadrant": [[float(x) for x in row] for row in w]}


def quadrant_from_json_dict(doc):
    w = np.asarray(doc["quadrant"], dtype=float)
    if w.shape != (doc["dim"], doc["dim"]):
        raise DimensionMismatch(
            f"quadrant shape {w.shape} does not match declared dim {doc['dim']}")
    return w
