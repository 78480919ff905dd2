"""Shared test utilities: random states and a brute-force operator oracle.

The oracle builds point operators by literal matrix products of operator
powers, independently of the package's closed-form construction, so the
two implementations check each other.
"""
import numpy as np


def random_pure_state(dim, rng):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_density_matrix(dim, rng):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m).real


def brute_shift(dim):
    u = np.zeros((dim, dim), dtype=complex)
    for n in range(dim):
        u[(n + 1) % dim, n] = 1.0
    return u


def brute_reflection(dim):
    r = np.zeros((dim, dim), dtype=complex)
    for n in range(dim):
        r[(dim - n) % dim, n] = 1.0
    return r


def brute_phase(dim):
    return np.diag(np.exp(2j * np.pi * np.arange(dim) / dim))


def brute_point_op(dim, q, p):
    """(1/2N) U^q R V^(-p) e^{i pi p q / N} by explicit matrix powers."""
    u_pow = np.linalg.matrix_power(brute_shift(dim), q)
    v_inv_pow = np.linalg.matrix_power(brute_phase(dim).conj().T, p)
    return (u_pow @ brute_reflection(dim) @ v_inv_pow
            * np.exp(1j * np.pi * p * q / dim) / (2 * dim))


def brute_quadrant(dim, rho):
    w = np.empty((dim, dim))
    for q in range(dim):
        for p in range(dim):
            w[q, p] = np.trace(brute_point_op(dim, q, p) @ rho).real
    return w
