"""General symmetric informationally complete (SIC) measurements.

A general SIC measurement in dimension d is a single POVM of d^2 elements
with unit trace sum Tr(P_j) = 1/d, uniform self-overlap Tr(P_j^2) = a, and
uniform pair overlap Tr(P_j P_k) = (1 - d a)/(d (d^2 - 1)). The parameter
a ranges over (1/d^3, 1/d^2]; a = 1/d^2 is the rank-one SIC-POVM case.

Built in: the qubit tetrahedron SIC-POVM (Bloch vectors at tetrahedron
vertices) and the depolarizing family P_j' = x P_j + (1 - x) I/d^2 that
interpolates between it and the trivial measurement. Sets for other
dimensions come in through the JSON import path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ValidationError
from .mums import clamp_probabilities
from .operators import matrix_from_json, matrix_to_json
from .validation import CheckResult, ValidationReport

DEFAULT_VALIDATE_TOL = 1e-9
IMPORT_TOL = 1e-8

# Unit tetrahedron vertices scaled to the Bloch ball.
TETRAHEDRON_BLOCH = np.array(
    [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ]
) / np.sqrt(3.0)

_PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)


@dataclass(frozen=True)
class SicSet:
    """A general SIC measurement: d^2 operators with uniform overlaps."""

    d: int
    a: float
    elements: np.ndarray  # shape (d^2, d, d), complex128, read-only


def tetrahedron_sic() -> SicSet:
    """The qubit SIC-POVM (I + b_j . sigma)/4 over tetrahedron vertices b_j."""
    eye = np.eye(2, dtype=np.complex128)
    elements = np.array(
        [(eye + np.einsum("i,ijk->jk", b, _PAULI)) / 4.0 for b in TETRAHEDRON_BLOCH]
    )
    elements.flags.writeable = False
    return SicSet(d=2, a=0.25, elements=elements)


def depolarized_sic(fiducial: SicSet, x: float) -> SicSet:
    """Mix a SIC set with white noise: P_j -> x P_j + (1 - x) I/d^2.

    Requires a valid rank-one fiducial (a = 1/d^2) and x in (0, 1]; x = 1
    returns the fiducial unchanged. The result is again a general SIC
    measurement with a(x) = x^2/d^2 + (1 - x^2)/d^3, strictly inside the
    admissible range for x < 1.
    """
    try:
        xv = float(x)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"x must be a number, got {x!r}") from exc
    if not 0.0 < xv <= 1.0:
        raise ValidationError(f"x must lie in (0, 1], got {xv!r}")
    report = validate_sic(fiducial, tol=DEFAULT_VALIDATE_TOL)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise ValidationError(f"fiducial set fails validation ({names})")
    d = fiducial.d
    if abs(fiducial.a - 1.0 / d**2) > 1e-10:
        raise ValidationError(
            f"fiducial must be rank-one (a = 1/d^2 = {1.0 / d**2!r}), got a = {fiducial.a!r}"
        )
    if xv == 1.0:
        return fiducial
    eye = np.eye(d, dtype=np.complex128) / d**2
    elements = xv * np.asarray(fiducial.elements) + (1.0 - xv) * eye
    self_traces = np.einsum("kij,kji->k", elements, elements).real
    a_new = float(self_traces.mean())
    if np.abs(self_traces - a_new).max() > 1e-12:
        raise ValidationError("depolarized elements lost their uniform self-overlap")
    if not 1.0 / d**3 < a_new <= 1.0 / d**2 + 1e-12:
        raise ValidationError(
            f"depolarized a = {a_new!r} left the admissible range (1/d^3, 1/d^2]"
        )
    elements.flags.writeable = False
    return SicSet(d=d, a=a_new, elements=elements)


def validate_sic(sic_set: SicSet, tol: float = DEFAULT_VALIDATE_TOL) -> ValidationReport:
    """Check the defining identities of a general SIC measurement."""
    d = sic_set.d
    a = sic_set.a
    el = np.asarray(sic_set.elements)
    if el.shape != (d * d, d, d):
        raise ValidationError(
            f"elements must have shape {(d * d, d, d)}, got {el.shape}"
        )

    traces = np.einsum("kii->k", el).real
    trace_dev = float(np.abs(traces - 1.0 / d).max())

    resolution_dev = float(np.abs(el.sum(axis=0) - np.eye(d)).max())

    flat = el.reshape(d * d, -1)
    gram = (flat @ flat.conj().T).real
    diag = np.eye(d * d, dtype=bool)
    self_dev = float(np.abs(gram[diag] - a).max())
    pair_target = (1.0 - d * a) / (d * (d * d - 1.0))
    pair_dev = float(np.abs(gram[~diag] - pair_target).max())

    lmin = float(np.linalg.eigvalsh(el)[:, 0].min())
    psd_dev = max(0.0, -lmin)

    # Binary range gate on a, reported as distance outside the interval.
    lo, hi = 1.0 / d**3, 1.0 / d**2
    range_dev = max(0.0, lo - a if a <= lo else 0.0, a - hi)

    return ValidationReport(
        checks=(
            CheckResult("element_trace", trace_dev, tol),
            CheckResult("resolution_of_identity", resolution_dev, tol),
            CheckResult("self_overlap_uniform", self_dev, tol),
            CheckResult("pair_overlap", pair_dev, tol),
            CheckResult("positivity", psd_dev, tol),
            CheckResult("purity_parameter_range", range_dev, tol),
        )
    )


def sic_measure(sic_set: SicSet, rho: np.ndarray) -> np.ndarray:
    """Outcome probabilities Tr(P_j rho) as a single row of d^2 entries."""
    d = sic_set.d
    r = np.asarray(rho, dtype=np.complex128)
    if r.shape != (d, d):
        raise ValidationError(f"state must have shape ({d}, {d}), got {r.shape}")
    flat = kernels.measure_batch(sic_set.elements, r[None, :, :])
    return clamp_probabilities(flat.reshape(d * d))


def sic_coincidence_closed_form(d: int, a, purity):
    """Index of coincidence of a general SIC measurement, in closed form.

    C(a, rho) = ((a d^3 - 1) Tr(rho^2) + d (1 - a d)) / (d (d^2 - 1))

    Equals 1/d^2 at the maximally mixed state for every a, and
    (a d^2 + 1)/(d (d + 1)) for pure states. Accepts scalar or ndarray
    ``purity``.
    """
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValidationError(f"dimension must be an integer >= 2, got {d!r}")
    av = np.asarray(a, dtype=np.float64)
    if np.any(av <= 1.0 / d**3) or np.any(av > 1.0 / d**2 + 1e-12):
        raise ValidationError(f"a must lie in (1/d^3, 1/d^2], got {a!r}")
    pur = np.asarray(purity, dtype=np.float64)
    if np.any(pur < 1.0 / d - 1e-12) or np.any(pur > 1.0 + 1e-12):
        raise ValidationError(f"purity must lie in [1/{d}, 1], got {purity!r}")
    c = ((av * d**3 - 1.0) * pur + d * (1.0 - av * d)) / (d * (d * d - 1.0))
    if np.isscalar(a) and np.isscalar(purity):
        return float(c)
    return c


def sic_to_json(sic_set: SicSet) -> dict:
    """Serialize to {"d", "a", "elements"} with re/im lists."""
    return {
        "d": sic_set.d,
        "a": sic_set.a,
        "elements": [matrix_to_json(m) for m in sic_set.elements],
    }


def sic_from_json(data, tol: float = IMPORT_TOL) -> SicSet:
    """Rebuild a SicSet from its JSON form, re-validating all identities."""
    if not isinstance(data, dict):
        raise ValidationError(f"expected a JSON object, got {type(data).__name__}")
    missing = [k for k in ("d", "a", "elements") if k not in data]
    if missing:
        raise ValidationError(f"SIC-set object missing keys: {missing}")
    d = int(data["d"])
    a = float(data["a"])
    if d < 2:
        raise ValidationError(f"dimension must be >= 2, got {d}")
    rows = data["elements"]
    if len(rows) != d * d:
        raise ValidationError(f"expected {d * d} elements, got {len(rows)}")
    elements = np.empty((d * d, d, d), dtype=np.complex128)
    for j, obj in enumerate(rows):
        m = matrix_from_json(obj)
        if m.shape != (d, d):
            raise ValidationError(
                f"element {j} has shape {m.shape}, expected ({d}, {d})"
            )
        elements[j] = m
    elements.flags.writeable = False
    sic_set = SicSet(d=d, a=a, elements=elements)
    report = validate_sic(sic_set, tol=tol)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise ValidationError(
            f"imported SIC set fails validation ({names}); "
            f"worst deviation {report.max_deviation:.3e} at tol {tol:.1e}"
        )
    return sic_set
