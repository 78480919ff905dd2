"""Two-qubit quantum kicked top with selective Wigner readout.

One drive period applies a pi/2 collective rotation about x (the kick)
followed by a nonlinear twist exp(-i (k/2) Jz^2); k is the chaoticity
parameter. The quantum run starts from a product spin coherent state,
evolves the 4-dimensional (j = 1) register, and after every period
reads a chosen set of Wigner cells, accumulating the scalar signature

    S(t) = sum of the selected W values (canonically the q=0 row).

The classical stroboscopic limit (kick: (X, Y, Z) -> (X, -Z, Y), twist:
rotation about z by k*Z) generates the phase portraits used to label
initial conditions regular or chaotic.
"""
import json
from dataclasses import dataclass

import numpy as np

from .phase_space import build_frame
from .qmat import dagger, expm_hermitian_generator, tensor
from .states import two_qubit_scs
from .tomography import CellSelection, circuit_read, direct_read

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
J_X = (tensor(SIGMA_X, np.eye(2)) + tensor(np.eye(2), SIGMA_X)) / 2
# Jz^2 = I/2 + (sigma_z x sigma_z)/2; the identity half only contributes
# a global phase, so the twist keeps the bilinear term alone.
ZZ_HALF = tensor(SIGMA_Z, SIGMA_Z) / 2

POINT_REGULAR = (np.pi / 2, np.pi)
POINT_CHAOTIC = (1.0, 2.5)
K_PRESETS = {"regular": 0.5, "mixed": 2.5, "chaotic": 2 * np.pi + 2.5}


def qkt_unitaries(k):
    """(U_kick, U_twist): pi/2 rotation about Jx and the Jz^2 twist at k."""
    u_kick = expm_hermitian_generator(J_X, np.pi / 2)
    u_twist = expm_hermitian_generator(ZZ_HALF, k / 2)
    return u_kick, u_twist


@dataclass(frozen=True)
class QKTParams:
    """One kicked-top run: chaoticity, length, start point, readout mode."""
    k: float
    kicks: int
    theta0: float
    phi0: float
    selection: CellSelection = None   # default: q=0 row of the quadrant
    method: str = "direct"            # 'direct' or 'circuit'
    shots: int = 0                    # >0 samples the circuit readout
    seed: object = None               # base RNG seed when sampling
    keep_states: bool = False


@dataclass(frozen=True)
class KickRecord:
    t: int
    cells: tuple
    values: np.ndarray
    s: float
    state: np.ndarray = None


@dataclass(frozen=True)
class KickedTopRun:
    params: QKTParams
    records: tuple

    def s_values(self):
        return np.array([rec.s for rec in self.records])

    def to_jsonl(self):
        """One JSON object per record: {"t": ..., "cells": [...], "S": ...}."""
        lines = []
        for rec in self.records:
            cells = [{"q": int(q), "p": int(p), "w": float(w)}
                     for (q, p), w in zip(rec.cells, rec.values)]
            lines.append(json.dumps({"t": rec.t, "cells": cells, "S": rec.s}))
        return "\n".join(lines) + "\n"

    def to_csv(self):
        """Rows t, W(cell_1..cell_m), S; no header."""
        return "".join(
            ",".join([str(rec.t)] + [repr(float(w)) for w in rec.values]
                     + [repr(rec.s)]) + "\n"
            for rec in self.records)


def run_qkt(params):
    """Evolve the kicked top and read the selection after every period.

    Returns kicks+1 records; record 0 is the unevolved coherent state.
    """
    if params.kicks < 0:
        raise ValueError(f"kicks must be >= 0, got {params.kicks}")
    if not np.isfinite(params.k):
        raise ValueError(f"chaoticity k must be finite, got {params.k!r}")
    if params.method not in ("direct", "circuit"):
        raise ValueError(f"unknown readout method {params.method!r}")
    if params.method == "direct" and params.shots:
        raise ValueError("shots apply only to the circuit readout method")

    frame = build_frame(4)
    sel = params.selection if params.selection is not None else CellSelection.row(4)
    rho = two_qubit_scs(params.theta0, params.phi0)
    u_kick, u_twist = qkt_unitaries(params.k)
    step = u_twist @ u_kick

    def read(t, rho):
        if params.method == "direct":
            result = direct_read(frame, rho, sel)
        else:
            base = 0 if params.seed is None else params.seed
            result = circuit_read(frame, rho, sel, shots=params.shots,
                                  seed=(base, t) if params.shots else None)
        return KickRecord(t=t, cells=sel.cells, values=result.values,
                          s=float(result.values.sum()),
                          state=rho.copy() if params.keep_states else None)

    records = [read(0, rho)]
    for t in range(1, params.kicks + 1):
        rho = step @ rho @ dagger(step)
        purity = float(np.einsum('ij,ji->', rho, rho).real)
        assert abs(purity - 1.0) <= 1e-9, f"purity drifted to {purity!r} at kick {t}"
        records.append(read(t, rho))
    return KickedTopRun(params=params, records=tuple(records))


# ---------------------------------------------------------------------------
# classical stroboscopic map

def angles_to_vector(theta, phi):
    """Unit Bloch vector of the coherent state at (theta, phi)."""
    return np.array([np.sin(theta) * np.cos(phi),
                     np.sin(theta) * np.sin(phi),
                     np.cos(theta)])


def vector_to_angles(v):
    """(theta, phi) of a unit vector, phi folded to [0, 2*pi)."""
    theta = np.arccos(min(max(float(v[2]), -1.0), 1.0))
    phi = float(np.arctan2(v[1], v[0])) % (2 * np.pi)
    return theta, phi


def classical_step(state, k):
    """One classical period: pi/2 kick about x, then twist about z by k*Z.

    The input must be a unit vector (tolerance 1e-12); the output is
    renormalized to scrub rounding drift.
    """
    v = np.asarray(state, dtype=float)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"classical state norm {norm!r} is not 1")
    x, y, z = v[0], -v[2], v[1]                     # kick
    cos_t, sin_t = np.cos(k * z), np.sin(k * z)     # twist angle k*Z'
    out = np.array([x * cos_t - y * sin_t, x * sin_t + y * cos_t, z])
    return out / np.linalg.norm(out)


def classical_trajectory(theta, phi, k, steps):
    """(theta, phi) samples after each of `steps` composed periods."""
    v = angles_to_vector(theta, phi)
    samples = np.empty((steps, 2))
    for i in range(steps):
        v = classical_step(v, k)
        samples[i] = vector_to_angles(v)
    return samples


def angle_grid(n_theta, n_phi):
    """Cell-centered (theta, phi) seed grid covering the sphere."""
    return [(np.pi * (i + 0.5) / n_theta, 2 * np.pi * (j + 0.5) / n_phi)
            for i in range(n_theta) for j in range(n_phi)]


def phase_portrait(k, seeds, steps):
    """Stroboscopic samples for every seed: array (n_seeds, steps, 2)."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    seeds = list(seeds)
    cloud = np.empty((len(seeds), steps, 2))
    for i, (theta, phi) in enumerate(seeds):
        cloud[i] = classical_trajectory(theta, phi, k, steps)
    return cloud


def occupancy(samples, bins=50):
    """Fraction of occupied bins in a (theta, phi) histogram of one trajectory.

    Low occupancy marks a regular orbit, high occupancy a chaotic one;
    this is the portrait regularity proxy used in the tests.
    """
    samples = np.asarray(samples)
    hist, _, _ = np.histogram2d(samples[:, 0], samples[:, 1], bins=bins,
                                range=[[0, np.pi], [0, 2 * np.pi]])
    return float(np.count_nonzero(hist) / hist.size)
