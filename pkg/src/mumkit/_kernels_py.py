"""Vectorized numpy implementations of the batch kernels.

Fallback for environments without the compiled extension; same call
surface as ``mumkit._kernels``. Probability rows are assumed nonnegative
(measurement code clamps before calling in); entries at or below
ZERO_CUTOFF are treated as exact zeros by the log-based kernels.
"""

from __future__ import annotations

import numpy as np

ZERO_CUTOFF = 1e-15


def measure_batch(ops, rhos):
    """Outcome probabilities Re Tr(P_k rho_s) for Hermitian stacks.

    ops: (K, d, d) complex, rhos: (S, d, d) complex -> (S, K) float64.
    For Hermitian pairs the trace reduces to the real Frobenius inner
    product, so the whole batch is one real matmul.
    """
    o = np.ascontiguousarray(ops, dtype=np.complex128)
    r = np.ascontiguousarray(rhos, dtype=np.complex128)
    ov = o.view(np.float64).reshape(o.shape[0], -1)
    rv = r.view(np.float64).reshape(r.shape[0], -1)
    return rv @ ov.T


def shannon_rows(p):
    """Shannon entropy in nats of each probability row; 0 log 0 := 0."""
    p = np.asarray(p, dtype=np.float64)
    q = np.where(p > ZERO_CUTOFF, p, 1.0)
    return -np.einsum("...j,...j->...", q, np.log(q))


def renyi_rows(p, alpha):
    """Renyi entropy in nats of each row, for alpha > 0, alpha != 1."""
    p = np.asarray(p, dtype=np.float64)
    if alpha == 2.0:
        s = np.einsum("...j,...j->...", p, p)
    else:
        s = (p**alpha).sum(axis=-1)
    return np.log(s) / (1.0 - alpha)


def min_entropy_rows(p):
    """-ln max_j p_j per row."""
    p = np.asarray(p, dtype=np.float64)
    return -np.log(p.max(axis=-1))


def tsallis_rows(p, alpha):
    """Tsallis entropy (sum p^alpha - 1)/(1 - alpha) per row."""
    p = np.asarray(p, dtype=np.float64)
    if alpha == 2.0:
        s = np.einsum("...j,...j->...", p, p)
    else:
        s = (p**alpha).sum(axis=-1)
    return (s - 1.0) / (1.0 - alpha)


def coincidence_rows(p):
    """Index of coincidence sum_j p_j^2 per row."""
    p = np.asarray(p, dtype=np.float64)
    return np.einsum("...j,...j->...", p, p)
