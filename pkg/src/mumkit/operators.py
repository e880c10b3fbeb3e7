"""Dense Hermitian operators, density matrices, and random-state sampling.

Matrices are plain ``complex128`` ndarrays. The constructor helpers below
validate their contract once and return read-only arrays; everything
downstream treats them as immutable values. Eigenproblems go through
LAPACK's Hermitian drivers (``numpy.linalg.eigh`` family), which keeps the
reconstruction residual well under the 1e-9 contract for the matrix sizes
used here (d up to a few dozen).
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
DENSITY_PSD_TOL = 1e-12


def _as_square_complex(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {a.shape}")
    return a


def hermitian(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Return a read-only Hermitian copy of ``m``.

    Asymmetry up to ``tol`` (entrywise, against the conjugate transpose) is
    repaired by averaging with the adjoint; anything larger is rejected.
    """
    a = _as_square_complex(m)
    adj = a.conj().T
    dev = np.abs(a - adj).max() if a.size else 0.0
    if dev > tol:
        raise ValidationError(
            f"matrix is not Hermitian: max |m - m^dag| = {dev:.3e} > {tol:.1e}"
        )
    h = (a + adj) / 2
    h.flags.writeable = False
    return h


def is_hermitian(m, tol: float = HERMITICITY_TOL) -> bool:
    a = _as_square_complex(m)
    return bool(np.abs(a - a.conj().T).max() <= tol) if a.size else True


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending."""
    return np.linalg.eigvalsh(hermitian(m))


def hermitian_eigensystem(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching orthonormal eigenvector columns."""
    return np.linalg.eigh(hermitian(m))


def hs_inner(a, b) -> float:
    """Hilbert-Schmidt inner product Tr(a b) of two Hermitian matrices."""
    ah = hermitian(a)
    bh = hermitian(b)
    if ah.shape != bh.shape:
        raise ValidationError(
            f"dimension mismatch: {ah.shape} vs {bh.shape}"
        )
    # vdot conjugates the first argument, so this is Tr(a^dag b) = Tr(a b).
    v = np.vdot(ah, bh)
    if abs(v.imag) > 1e-12:
        raise ValidationError(
            f"trace inner product has imaginary part {v.imag:.3e}"
        )
    return float(v.real)


def density_matrix(m) -> np.ndarray:
    """Validate ``m`` as a density matrix and return it read-only.

    Checks Hermiticity (1e-12), unit trace (1e-12), and positive
    semidefiniteness (eigenvalues >= -1e-12).
    """
    h = hermitian(m)
    tr = np.trace(h).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValidationError(f"trace must be 1, got {tr!r}")
    lo = np.linalg.eigvalsh(h)[0]
    if lo < -DENSITY_PSD_TOL:
        raise ValidationError(
            f"matrix is not positive semidefinite: min eigenvalue {lo:.3e}"
        )
    return h


def purity(rho) -> float:
    """Tr(rho^2), computed as the squared Frobenius norm of a Hermitian rho."""
    h = hermitian(rho)
    return float(np.sum(h.real**2 + h.imag**2))


def random_density_matrix(d: int, rank: int | None = None, seed=None) -> np.ndarray:
    """Sample a random density matrix of dimension ``d`` and given rank.

    Draws a d x rank Ginibre matrix G of iid standard complex Gaussians and
    returns G G^dag normalized to unit trace. ``rank=1`` gives Haar-random
    pure states; ``rank=d`` gives the Hilbert-Schmidt ensemble.

    Parameters
    ----------
    d : int
        Hilbert-space dimension, at least 1.
    rank : int, optional
        Number of Ginibre columns, in [1, d]. Defaults to ``d``.
    seed : int, sequence of ints, or numpy.random.Generator, optional
        Fixed seeds reproduce the state bit for bit. Passing a Generator
        draws from it in place, which keeps RNG state caller-owned.

    Returns
    -------
    numpy.ndarray
        Read-only (d, d) complex density matrix.
    """
    if not isinstance(d, (int, np.integer)) or d < 1:
        raise ValidationError(f"dimension must be a positive integer, got {d!r}")
    if rank is None:
        rank = int(d)
    if not isinstance(rank, (int, np.integer)) or not 1 <= rank <= d:
        raise ValidationError(f"rank must lie in [1, {d}], got {rank!r}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = g @ g.conj().T
    # matmul with FMA can leave ~1e-19 imaginary dust on the diagonal;
    # symmetrize so the result is exactly Hermitian (and idempotent under
    # the symmetrization every importer applies)
    rho = 0.5 * (rho + rho.conj().T)
    rho /= np.trace(rho).real
    rho.flags.writeable = False
    return rho


def density_to_json(rho) -> dict:
    """Serialize a density matrix to {"dim", "re", "im"} with row-major lists."""
    h = density_matrix(rho)
    return {
        "dim": int(h.shape[0]),
        "re": h.real.tolist(),
        "im": h.imag.tolist(),
    }


def density_from_json(data) -> np.ndarray:
    """Parse and validate the {"dim", "re", "im"} density-matrix form."""
    m = matrix_from_json(data, dim_key="dim")
    return density_matrix(m)


def matrix_from_json(data, dim_key: str | None = None) -> np.ndarray:
    """Rebuild a complex matrix from {"re": [[...]], "im": [[...]]} lists."""
    if not isinstance(data, dict):
        raise ValidationError(f"expected a JSON object, got {type(data).__name__}")
    missing = [k for k in ("re", "im") if k not in data]
    if missing:
        raise ValidationError(f"matrix object missing keys: {missing}")
    try:
        re = np.asarray(data["re"], dtype=np.float64)
        im = np.asarray(data["im"], dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"matrix entries are not numeric: {exc}") from exc
    if re.shape != im.shape or re.ndim != 2 or re.shape[0] != re.shape[1]:
        raise ValidationError(
            f"re/im must be equal square arrays, got {re.shape} and {im.shape}"
        )
    if dim_key is not None:
        if dim_key not in data:
            raise ValidationError(f"matrix object missing key: {dim_key!r}")
        if int(data[dim_key]) != re.shape[0]:
            raise ValidationError(
                f"declared {dim_key}={data[dim_key]} but arrays are {re.shape[0]}x{re.shape[1]}"
            )
    return re + 1j * im


def matrix_to_json(m) -> dict:
    a = _as_square_complex(m)
    return {"re": a.real.tolist(), "im": a.imag.tolist()}
