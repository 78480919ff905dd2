"""Wigner readout: direct traces, the interferometric circuit, sampling.

Three ways to obtain W(q, p) for a chosen set of cells:

  * direct_read     -- exact traces Tr[A(q, p) rho], cost per cell;
  * circuit_read    -- simulate the ancilla interferometer: the ancilla
                       is Hadamard-split, controls the scaled unitary
                       point operator, is recombined, and its <Z>
                       equals 2N * W(q, p); shots=0 keeps the exact
                       expectation, shots>0 samples the two-outcome
                       ancilla statistics;
  * prune/sparsity  -- thresholding analysis of quadrant structure.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonUnitaryPointOperator
from .phase_space import ensure_real, fold_cell
from .qmat import dagger, tensor

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_PAULI_Z = np.diag([1.0, -1.0]).astype(complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]])


@dataclass(frozen=True)
class CellSelection:
    """Ordered set of phase-space cells to read selectively.

    Cells may be given anywhere on the full 2N x 2N grid; each is folded
    into the quadrant with its sign. Two cells that fold onto the same
    quadrant point are redundant and rejected.
    """
    dim: int
    cells: tuple          # the (q, p) pairs as requested
    folded: tuple         # matching (q0, p0, sign) triples

    @classmethod
    def make(cls, dim, cells):
        cells = tuple((int(q), int(p)) for q, p in cells)
        folded = tuple(fold_cell(dim, q, p) for q, p in cells)
        seen = set()
        for (q, p), (q0, p0, _) in zip(cells, folded):
            if (q0, p0) in seen:
                raise ValueError(
                    f"cell ({q}, {p}) folds onto an already selected "
                    f"quadrant point ({q0}, {p0})")
            seen.add((q0, p0))
        return cls(dim=dim, cells=cells, folded=folded)

    @classmethod
    def row(cls, dim, q=0):
        """All quadrant cells on the line with fixed q (default the q=0 row)."""
        return cls.make(dim, [(q, p) for p in range(dim)])

    @classmethod
    def full(cls, dim):
        """Every cell of the quadrant, row-major."""
        return cls.make(dim, [(q, p) for q in range(dim) for p in range(dim)])

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class TomographyResult:
    """W estimates for the requested cells.

    method is one of 'direct', 'circuit-exact', 'circuit-sampled';
    shots is 0 for the exact methods; seed is set only when sampled.
    """
    dim: int
    method: str
    shots: int
    seed: object
    cells: tuple
    values: np.ndarray

    def as_dict(self):
        return {cell: float(v) for cell, v in zip(self.cells, self.values)}

    def to_json_dict(self):
        return {
            "method": self.method,
            "shots": int(self.shots),
            "cells": [{"q": int(q), "p": int(p), "w": float(v)}
                      for (q, p), v in zip(self.cells, self.values)],
        }

    def to_csv(self):
        """Quadrant-layout CSV; cells that were not read are empty fields.

        Cells requested outside the quadrant are shown at their folded
        position with the quadrant value (requested value / sign).
        """
        grid = [["" for _ in range(self.dim)] for _ in range(self.dim)]
        for (q0, p0, sign), v in zip(self.folded_cells(), self.values):
            grid[q0][p0] = repr(float(v) * sign)
        return "".join(",".join(row) + "\n" for row in grid)

    def folded_cells(self):
        return tuple(fold_cell(self.dim, q, p) for q, p in self.cells)


def _check_dims(frame, rho, sel):
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (frame.dim, frame.dim):
        raise DimensionMismatch(
            f"state shape {rho.shape} does not match frame dimension {frame.dim}")
    if sel.dim != frame.dim:
        raise DimensionMismatch(
            f"selection dimension {sel.dim} does not match frame dimension {frame.dim}")
    return rho


def direct_read(frame, rho, sel):
    """Exact W values for the selected cells; work scales with len(sel)."""
    rho = _check_dims(frame, rho, sel)
    traces = np.array([np.einsum('ij,ji->', frame.point_ops[q0, p0], rho)
                       for q0, p0, _ in sel.folded])
    signs = np.array([sign for _, _, sign in sel.folded])
    return TomographyResult(dim=frame.dim, method="direct", shots=0, seed=None,
                            cells=sel.cells, values=ensure_real(traces) * signs)


def _ancilla_z(frame, rho, q0, p0):
    """Run the interferometer for one quadrant cell; return exact <Z>, <Y>."""
    dim = frame.dim
    scaled = 2 * dim * frame.point_ops[q0, p0]
    defect = np.max(np.abs(dagger(scaled) @ scaled - np.eye(dim)))
    if defect > 1e-10:
        raise NonUnitaryPointOperator(
            f"scaled point operator at ({q0}, {p0}) deviates from unitarity "
            f"by {defect:.3e}")
    split = tensor(_HADAMARD, np.eye(dim))
    controlled = np.zeros((2 * dim, 2 * dim), dtype=complex)
    controlled[:dim, :dim] = np.eye(dim)
    controlled[dim:, dim:] = scaled
    joint = np.zeros((2 * dim, 2 * dim), dtype=complex)
    joint[:dim, :dim] = rho
    circuit = split @ controlled @ split
    final = circuit @ joint @ dagger(circuit)
    zexp = float(np.einsum('ij,ji->', tensor(_PAULI_Z, np.eye(dim)), final).real)
    yres = complex(np.einsum('ij,ji->', tensor(_PAULI_Y, np.eye(dim)), final))
    return zexp, abs(yres)


def circuit_read(frame, rho, sel, shots=0, seed=None):
    """Interferometric W readout; shots=0 exact, shots>0 sampled.

    Sampling draws each cell's +/- ancilla outcomes from a dedicated
    generator seeded with (seed, q, p), so results are reproducible and
    independent of selection order.
    """
    rho = _check_dims(frame, rho, sel)
    if shots < 0:
        raise ValueError(f"shots must be >= 0, got {shots}")
    if shots > 0:
        seed = 0 if seed is None else seed
        key = tuple(seed) if isinstance(seed, (tuple, list)) else (int(seed),)
    values = np.empty(len(sel.cells))
    for i, ((q, p), (q0, p0, sign)) in enumerate(zip(sel.cells, sel.folded)):
        zexp, yres = _ancilla_z(frame, rho, q0, p0)
        assert yres < 1e-8, "imaginary interferometer quadrature is nonzero"
        if shots > 0:
            p_plus = min(max((1 + zexp) / 2, 0.0), 1.0)
            n_plus = np.random.default_rng([*key, q, p]).binomial(shots, p_plus)
            zexp = (2 * n_plus - shots) / shots
        values[i] = sign * zexp / (2 * frame.dim)
    if shots > 0:
        return TomographyResult(dim=frame.dim, method="circuit-sampled",
                                shots=int(shots), seed=seed,
                                cells=sel.cells, values=values)
    return TomographyResult(dim=frame.dim, method="circuit-exact", shots=0,
                            seed=None, cells=sel.cells, values=values)


def sampling_stderr(w_exact, shots, dim):
    """Binomial standard error of the sampled W estimator for one cell."""
    p_plus = (1 + 2 * dim * w_exact) / 2
    return np.sqrt(p_plus * (1 - p_plus) / shots) / dim


def prune(quadrant, threshold):
    """Zero every entry with magnitude below threshold * max|W|.

    The result generally violates state consistency; reconstruct() flags
    that rather than refusing.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold {threshold!r} outside [0, 1]")
    w = np.array(np.asarray(quadrant, dtype=float))
    w[np.abs(w) < threshold * np.max(np.abs(w))] = 0.0
    return w


def sparsity(matrix, threshold):
    """Fraction of entries with magnitude below threshold * max magnitude."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold {threshold!r} outside [0, 1]")
    mags = np.abs(np.asarray(matrix))
    return float(np.count_nonzero(mags < threshold * mags.max()) / mags.size)
