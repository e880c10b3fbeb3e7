"""Construction and validation of complete sets of mutually unbiased measurements.

A complete MUM set in dimension d consists of d + 1 POVMs with d outcomes
each, built from a traceless Hermitian orthonormal basis {F_{n,b}} split
into d + 1 groups of d - 1 operators:

    F^(b)   = sum_n F_{n,b}
    F_n^(b) = F^(b) - (d + sqrt(d)) F_{n,b}      for n = 1 .. d-1
    F_d^(b) = (1 + sqrt(d)) F^(b)

    P_n^(b) = I/d + t F_n^(b)

The efficiency parameter t > 0 is capped by positivity at t_max (the
smallest 1/(d |lambda_min|) over the building blocks), and the sharpness

    kappa = 1/d + t^2 (1 + sqrt(d))^2 (d - 1)

is Tr[(P_n^(b))^2], identical for every element. kappa = 1 corresponds to
projective MUBs and is reached at t_max only for d = 2 with this basis;
positive semidefiniteness guarantees kappa <= 1 whenever 0 < t <= t_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ValidationError
from .gellmann import OperatorBasis, gellmann_basis, validate_operator_basis
from .operators import matrix_from_json, matrix_to_json
from .validation import CheckResult, ValidationReport

PROB_CLAMP_TOL = 1e-12
KAPPA_CONSISTENCY_TOL = 1e-12
DEFAULT_VALIDATE_TOL = 1e-9
IMPORT_TOL = 1e-8
# Relative slack so that t = max_t(...) round-trips through build_mums.
_T_RANGE_SLACK = 1e-12


@dataclass(frozen=True)
class MumSet:
    """A complete set of d + 1 mutually unbiased measurements.

    ``elements`` has shape (d + 1, d, d, d): measurement b, outcome n,
    then the operator matrix. ``f_ops`` holds the traceless building
    blocks F_n^(b) on the same grid, kept for diagnostics. ``basis``
    records which operator basis the construction started from.
    """

    d: int
    t: float
    kappa: float
    elements: np.ndarray
    f_ops: np.ndarray = field(repr=False)
    basis: str = "gellmann"

    @property
    def n_measurements(self) -> int:
        return self.d + 1


def build_f_operators(basis: OperatorBasis) -> np.ndarray:
    """Traceless building blocks F_n^(b), shape (d + 1, d, d, d).

    Validates the supplied basis (Hermitian, traceless, HS-orthonormal)
    before combining it.
    """
    validate_operator_basis(basis)
    d = basis.d
    g = basis.groups
    group_sums = g.sum(axis=1)  # F^(b)
    f = np.empty((d + 1, d, d, d), dtype=np.complex128)
    f[:, : d - 1] = group_sums[:, None, :, :] - (d + math.sqrt(d)) * g
    f[:, d - 1] = (1.0 + math.sqrt(d)) * group_sums
    f.flags.writeable = False
    return f


def max_t(d_or_f_ops) -> float:
    """Largest t keeping every I/d + t F positive semidefinite.

    Equals (1/d) / max_n,b |lambda_min(F_n^(b))|; some element of the
    resulting set is exactly singular at this value. Accepts either the
    dimension (building blocks are derived internally) or an explicit
    F-operator array.
    """
    if isinstance(d_or_f_ops, (int, np.integer)):
        f = build_f_operators(gellmann_basis(int(d_or_f_ops)))
    else:
        f = np.asarray(d_or_f_ops)
    d = f.shape[-1]
    lmin = np.linalg.eigvalsh(f.reshape(-1, d, d))[:, 0].min()
    if lmin >= 0:
        raise ValidationError(
            "building blocks have no negative eigenvalue; cannot bound t"
        )
    return float((1.0 / d) / (-lmin))


def kappa_from_t(d: int, t: float) -> float:
    """Sharpness kappa = 1/d + t^2 (1 + sqrt(d))^2 (d - 1)."""
    return 1.0 / d + t * t * (1.0 + math.sqrt(d)) ** 2 * (d - 1)


def build_mums(d: int, t: float | str | None = None) -> MumSet:
    """Construct the complete MUM set for dimension ``d`` at efficiency ``t``.

    Parameters
    ----------
    d : int
        Dimension, at least 2.
    t : float, "max", or None
        Efficiency parameter in (0, t_max]. None or "max" selects t_max.

    Raises
    ------
    ValidationError
        If d < 2, t falls outside (0, t_max], or the resulting sharpness
        leaves (1/d, 1] (never observed for the built-in basis; checked
        rather than assumed).
    """
    basis = gellmann_basis(d)
    f = build_f_operators(basis)
    t_cap = max_t(f)
    if t is None or (isinstance(t, str) and t == "max"):
        t_val = t_cap
    else:
        try:
            t_val = float(t)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"t must be a number or 'max', got {t!r}") from exc
        if t_val <= 0.0:
            raise ValidationError(
                f"t must lie in (0, t_max] with t_max = {t_cap:.12g}; got {t_val!r}"
            )
        if t_val > t_cap * (1.0 + _T_RANGE_SLACK):
            raise ValidationError(
                f"t exceeds t_max: allowed interval is (0, {t_cap:.12g}], got {t_val!r}"
            )
        t_val = min(t_val, t_cap)
    kappa = kappa_from_t(d, t_val)
    if not (1.0 / d < kappa <= 1.0 + KAPPA_CONSISTENCY_TOL):
        raise ValidationError(
            f"sharpness kappa = {kappa!r} falls outside (1/{d}, 1] at t = {t_val!r}"
        )
    eye = np.eye(d, dtype=np.complex128) / d
    elements = eye + t_val * f
    elements.flags.writeable = False
    return MumSet(d=int(d), t=t_val, kappa=kappa, elements=elements, f_ops=f)


def validate_mums(mum_set: MumSet, tol: float = DEFAULT_VALIDATE_TOL) -> ValidationReport:
    """Check every defining identity of a complete MUM set.

    Covers unit traces, resolution of the identity per measurement, the
    within- and cross-measurement pair traces, positive semidefiniteness,
    and consistency of the stored kappa with its formula in t. Each check
    reports its worst deviation against ``tol`` (kappa consistency uses a
    fixed 1e-12).
    """
    d = mum_set.d
    kappa = mum_set.kappa
    el = np.asarray(mum_set.elements)
    if el.shape != (d + 1, d, d, d):
        raise ValidationError(
            f"elements must have shape {(d + 1, d, d, d)}, got {el.shape}"
        )
    n_ops = (d + 1) * d

    traces = np.einsum("bnii->bn", el).real
    trace_dev = float(np.abs(traces - 1.0).max())

    sums = el.sum(axis=1)
    eye = np.eye(d)
    resolution_dev = float(np.abs(sums - eye).max())

    flat = el.reshape(n_ops, -1)
    gram = (flat @ flat.conj().T).real  # Tr(P Q) for Hermitian pairs
    b_idx = np.repeat(np.arange(d + 1), d)
    same_b = b_idx[:, None] == b_idx[None, :]
    diag = np.eye(n_ops, dtype=bool)
    cross_dev = float(np.abs(gram[~same_b] - 1.0 / d).max())
    self_dev = float(np.abs(gram[diag] - kappa).max())
    off_mask = same_b & ~diag
    off_dev = float(np.abs(gram[off_mask] - (1.0 - kappa) / (d - 1)).max())

    lmin = float(np.linalg.eigvalsh(el.reshape(-1, d, d))[:, 0].min())
    psd_dev = max(0.0, -lmin)

    kappa_dev = abs(kappa - kappa_from_t(d, mum_set.t))

    return ValidationReport(
        checks=(
            CheckResult("element_trace", trace_dev, tol),
            CheckResult("resolution_of_identity", resolution_dev, tol),
            CheckResult("cross_measurement_overlap", cross_dev, tol),
            CheckResult("within_measurement_purity", self_dev, tol),
            CheckResult("within_measurement_overlap", off_dev, tol),
            CheckResult("positivity", psd_dev, tol),
            CheckResult("kappa_consistency", kappa_dev, KAPPA_CONSISTENCY_TOL),
        )
    )


def clamp_probabilities(probs: np.ndarray) -> np.ndarray:
    """Clamp rounding noise in measurement probabilities to [0, 1].

    Values in [-1e-12, 0) and (1, 1 + 1e-12] are snapped to the boundary;
    anything further out signals a genuinely invalid input and raises.
    """
    p = np.asarray(probs, dtype=np.float64)
    lo = p.min()
    hi = p.max()
    if lo < -PROB_CLAMP_TOL:
        raise ValidationError(f"probability {lo!r} below -{PROB_CLAMP_TOL:.0e}")
    if hi > 1.0 + PROB_CLAMP_TOL:
        raise ValidationError(f"probability {hi!r} above 1 + {PROB_CLAMP_TOL:.0e}")
    return np.clip(p, 0.0, 1.0)


def measure(mum_set: MumSet, rho: np.ndarray) -> np.ndarray:
    """Outcome probabilities Tr(P_n^(b) rho), shape (d + 1, d).

    Rows are per-measurement distributions summing to 1 (up to rounding);
    tiny negative entries from floating-point noise are clamped to 0.
    """
    d = mum_set.d
    r = np.asarray(rho, dtype=np.complex128)
    if r.shape != (d, d):
        raise ValidationError(f"state must have shape ({d}, {d}), got {r.shape}")
    flat = kernels.measure_batch(mum_set.elements.reshape(-1, d, d), r[None, :, :])
    return clamp_probabilities(flat.reshape(d + 1, d))


def coincidence_bruteforce(mum_set_or_table, rho=None) -> float:
    """Sum of squared probabilities over an entire measurement table.

    Pass a probability table directly, or a MumSet together with a state
    (the table then comes from ``measure``). This is the independent route
    against which the closed form is checked.
    """
    if rho is not None:
        table = measure(mum_set_or_table, rho)
    else:
        table = mum_set_or_table
    p = np.asarray(table, dtype=np.float64)
    return float(np.sum(p * p))


def coincidence_closed_form(d: int, kappa, purity):
    """Total index of coincidence of a complete MUM set, in closed form.

    C(kappa, rho) = ((d kappa - 1)(d Tr(rho^2) - 1) + d^2 - 1) / (d (d - 1))

    Accepts scalar or ndarray ``purity`` (the latter for vectorized
    sweeps). Degenerations: purity
    1 gives kappa + 1; kappa = 1 gives purity + 1; purity = 1/d gives
    (d + 1)/d regardless of kappa.
    """
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValidationError(f"dimension must be an integer >= 2, got {d!r}")
    kap = np.asarray(kappa, dtype=np.float64)
    if np.any(kap <= 1.0 / d) or np.any(kap > 1.0 + 1e-12):
        raise ValidationError(f"kappa must lie in (1/{d}, 1], got {kappa!r}")
    pur = np.asarray(purity, dtype=np.float64)
    if np.any(pur < 1.0 / d - 1e-12) or np.any(pur > 1.0 + 1e-12):
        raise ValidationError(f"purity must lie in [1/{d}, 1], got {purity!r}")
    c = ((d * kap - 1.0) * (d * pur - 1.0) + d * d - 1.0) / (d * (d - 1.0))
    if np.isscalar(kappa) and np.isscalar(purity):
        return float(c)
    return c


def mums_to_json(mum_set: MumSet) -> dict:
    """Serialize to {"d", "t", "kappa", "basis", "elements"} with re/im lists."""
    return {
        "d": mum_set.d,
        "t": mum_set.t,
        "kappa": mum_set.kappa,
        "basis": mum_set.basis,
        "elements": [
            [matrix_to_json(mum_set.elements[b, n]) for n in range(mum_set.d)]
            for b in range(mum_set.d + 1)
        ],
    }


def mums_from_json(data, tol: float = IMPORT_TOL) -> MumSet:
    """Rebuild a MumSet from its JSON form, re-validating all identities.

    The building blocks are recovered exactly from the elements via
    F = (P - I/d)/t, so a round trip reproduces diagnostics as well.
    """
    if not isinstance(data, dict):
        raise ValidationError(f"expected a JSON object, got {type(data).__name__}")
    missing = [k for k in ("d", "t", "kappa", "elements") if k not in data]
    if missing:
        raise ValidationError(f"measurement-set object missing keys: {missing}")
    d = int(data["d"])
    t = float(data["t"])
    kappa = float(data["kappa"])
    if d < 2:
        raise ValidationError(f"dimension must be >= 2, got {d}")
    if t <= 0:
        raise ValidationError(f"t must be positive, got {t!r}")
    rows = data["elements"]
    if len(rows) != d + 1 or any(len(row) != d for row in rows):
        raise ValidationError(
            f"elements must form a ({d + 1}) x {d} grid of matrices"
        )
    elements = np.empty((d + 1, d, d, d), dtype=np.complex128)
    for b, row in enumerate(rows):
        for n, obj in enumerate(row):
            m = matrix_from_json(obj)
            if m.shape != (d, d):
                raise ValidationError(
                    f"element ({b}, {n}) has shape {m.shape}, expected ({d}, {d})"
                )
            elements[b, n] = m
    eye = np.eye(d, dtype=np.complex128) / d
    f_ops = (elements - eye) / t
    elements.flags.writeable = False
    f_ops.flags.writeable = False
    mum_set = MumSet(
        d=d,
        t=t,
        kappa=kappa,
        elements=elements,
        f_ops=f_ops,
        basis=str(data.get("basis", "imported")),
    )
    report = validate_mums(mum_set, tol=tol)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise ValidationError(
            f"imported measurement set fails validation ({names}); "
            f"worst deviation {report.max_deviation:.3e} at tol {tol:.1e}"
        )
    return mum_set
