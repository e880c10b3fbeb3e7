"""Entropy functionals on finite probability vectors.

Shannon entropy takes an explicit base (2 or e); the Renyi and Tsallis
families use natural logarithms throughout. Scalar wrappers validate the
probability vector once and delegate to the batch kernels so both kernel
backends serve the same formulas.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .errors import ValidationError

_LN2 = math.log(2.0)
SUM_TOL = 1e-10
NEGATIVE_TOL = 1e-12
ALPHA_SHANNON_WINDOW = 1e-8  # renyi switches to the Shannon branch inside this


def prob_vector(p) -> np.ndarray:
    """Validate and normalize the representation of a probability vector.

    Entries must be >= -1e-12 (tiny negatives are clamped to 0) and sum to
    1 within 1e-10. Entries at or below 1e-15 are zeroed so that all
    functionals treat them as exact zeros.
    """
    arr = np.asarray(p, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValidationError(f"probability vector must be 1-D and nonempty, got shape {arr.shape}")
    if arr.min() < -NEGATIVE_TOL:
        raise ValidationError(f"negative probability {arr.min()!r}")
    arr = np.where(arr <= kernels.ZERO_CUTOFF, 0.0, arr)
    s = arr.sum()
    if abs(s - 1.0) > SUM_TOL:
        raise ValidationError(f"probabilities sum to {s!r}, expected 1")
    return np.ascontiguousarray(arr)


def shannon(p, base=2) -> float:
    """Shannon entropy of ``p`` in the given base (2 or e); 0 log 0 := 0."""
    vec = prob_vector(p)
    nats = float(kernels.shannon_rows(vec[None, :])[0])
    if base == 2 or base == "2":
        return nats / _LN2
    if base == "e" or base == math.e:
        return nats
    raise ValidationError(f"base must be 2 or e, got {base!r}")


def renyi(p, alpha: float) -> float:
    """Renyi entropy (1/(1-alpha)) ln sum p^alpha in nats, alpha > 0.

    alpha within 1e-8 of 1 routes to the Shannon branch (the direct
    formula cancels catastrophically there); alpha = inf gives min-entropy.
    """
    a = float(alpha)
    if not a > 0:
        raise ValidationError(f"alpha must be positive, got {alpha!r}")
    vec = prob_vector(p)
    if math.isinf(a):
        return float(kernels.min_entropy_rows(vec[None, :])[0])
    if abs(a - 1.0) <= ALPHA_SHANNON_WINDOW:
        return float(kernels.shannon_rows(vec[None, :])[0])
    return float(kernels.renyi_rows(vec[None, :], a)[0])


def min_entropy(p) -> float:
    """-ln of the largest entry (the alpha -> inf Renyi limit)."""
    vec = prob_vector(p)
    return float(kernels.min_entropy_rows(vec[None, :])[0])


def alpha_log(x, alpha: float):
    """The alpha-logarithm ln_alpha(x) = (x^(1-alpha) - 1)/(1 - alpha).

    Defined for x > 0 and alpha > 0, alpha != 1; tends to ln x as
    alpha -> 1. Accepts scalar or ndarray x.
    """
    a = float(alpha)
    if not a > 0 or a == 1.0:
        raise ValidationError(f"alpha must be positive and != 1, got {alpha!r}")
    xv = np.asarray(x, dtype=np.float64)
    if np.any(xv <= 0):
        raise ValidationError(f"alpha_log needs x > 0, got {x!r}")
    val = (xv ** (1.0 - a) - 1.0) / (1.0 - a)
    return float(val) if np.isscalar(x) else val


def tsallis(p, alpha: float) -> float:
    """Tsallis entropy (sum p^alpha - 1)/(1 - alpha) in nats, alpha > 0.

    Equals sum_j p_j ln_alpha(1/p_j). As with ``renyi``, alpha within 1e-8
    of 1 routes to the Shannon value, which is the limit there.
    """
    a = float(alpha)
    if not a > 0:
        raise ValidationError(f"alpha must be positive, got {alpha!r}")
    vec = prob_vector(p)
    if abs(a - 1.0) <= ALPHA_SHANNON_WINDOW:
        return float(kernels.shannon_rows(vec[None, :])[0])
    return float(kernels.tsallis_rows(vec[None, :], a)[0])


def index_of_coincidence(p) -> float:
    """Sum of squared probabilities, in [1/len(p), 1]."""
    vec = prob_vector(p)
    return float(kernels.coincidence_rows(vec[None, :])[0])
