"""Generalized Gell-Mann basis of traceless Hermitian matrices.

For dimension d this is the standard set of d^2 - 1 matrices: symmetric
pairs (|j><k| + |k><j|), antisymmetric pairs (-i|j><k| + i|k><j|), and the
diagonal ladder diag(1, ..., 1, -l, 0, ..., 0), each rescaled to unit
Hilbert-Schmidt norm. d = 2 recovers the Pauli matrices over sqrt(2).

The flat list is partitioned sequentially into d + 1 groups of d - 1
operators (symmetric block first, then antisymmetric, then diagonal); any
partition of an orthonormal traceless basis works equally well for the
downstream construction, so the canonical ordering is just a fixed,
reproducible choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

ORTHONORMALITY_TOL = 1e-10
TRACELESS_TOL = 1e-12


@dataclass(frozen=True)
class OperatorBasis:
    """d^2 - 1 traceless Hermitian matrices in d + 1 groups of d - 1."""

    d: int
    groups: np.ndarray  # shape (d + 1, d - 1, d, d), complex128, read-only

    @property
    def flat(self) -> np.ndarray:
        return self.groups.reshape(-1, self.d, self.d)


def gellmann_matrices(d: int) -> np.ndarray:
    """Flat (d^2 - 1, d, d) array of unit-norm generalized Gell-Mann matrices."""
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValidationError(f"dimension must be an integer >= 2, got {d!r}")
    mats = np.zeros((d * d - 1, d, d), dtype=np.complex128)
    i = 0
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for j in range(d):
        for k in range(j + 1, d):
            mats[i, j, k] = inv_sqrt2
            mats[i, k, j] = inv_sqrt2
            i += 1
    for j in range(d):
        for k in range(j + 1, d):
            mats[i, j, k] = -1j * inv_sqrt2
            mats[i, k, j] = 1j * inv_sqrt2
            i += 1
    for l in range(1, d):
        norm = 1.0 / np.sqrt(l * (l + 1))
        mats[i, range(l), range(l)] = norm
        mats[i, l, l] = -l * norm
        i += 1
    return mats


def gellmann_basis(d: int) -> OperatorBasis:
    """Build the canonical operator basis for dimension ``d`` (d >= 2)."""
    groups = gellmann_matrices(d).reshape(d + 1, d - 1, d, d)
    groups.flags.writeable = False
    return OperatorBasis(d=int(d), groups=groups)


def validate_operator_basis(basis: OperatorBasis) -> None:
    """Check Hermiticity, tracelessness, and pairwise HS orthonormality.

    Raises ValidationError on the first violated property.
    """
    d = basis.d
    flat = basis.flat
    if flat.shape != (d * d - 1, d, d):
        raise ValidationError(
            f"basis must hold {d * d - 1} matrices of shape ({d}, {d}), "
            f"got array of shape {basis.groups.shape}"
        )
    herm_dev = np.abs(flat - flat.conj().transpose(0, 2, 1)).max()
    if herm_dev > 1e-12:
        raise ValidationError(f"basis elements not Hermitian: deviation {herm_dev:.3e}")
    trace_dev = np.abs(np.einsum("kii->k", flat)).max()
    if trace_dev > TRACELESS_TOL:
        raise ValidationError(f"basis elements not traceless: deviation {trace_dev:.3e}")
    vecs = flat.reshape(len(flat), -1)
    gram = (vecs @ vecs.conj().T).real
    gram_dev = np.abs(gram - np.eye(len(flat))).max()
    if gram_dev > ORTHONORMALITY_TOL:
        raise ValidationError(
            f"basis is not HS-orthonormal: Gram deviation {gram_dev:.3e}"
        )
