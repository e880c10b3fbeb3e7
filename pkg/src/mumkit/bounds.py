"""Entropic uncertainty lower bounds and their Monte Carlo verification.

Shannon-family bounds (log form, Harremoes-Topsoe form) are reported in
bits; the Renyi, min-entropy, and Tsallis bounds in nats. Every bound has
a state-dependent form, driven by the closed-form index of coincidence C
at the state's purity, and a state-independent form obtained at purity 1;
the verifier evaluates both and never compares across log bases.

``verify_bounds`` samples random states, computes achieved average
entropies next to every applicable bound, and aggregates gaps. A gap
below -1e-9 counts as a violation; that tolerance sits one order above
the 1e-10 noise floor of the probability and eigenvalue pipeline, so a
flag always signals a genuine inequality failure rather than rounding.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .entropy import alpha_log
from .errors import ValidationError
from .mums import MumSet, clamp_probabilities, coincidence_closed_form
from .operators import random_density_matrix
from .sic import SicSet, sic_coincidence_closed_form

_LN2 = math.log(2.0)

#: A gap below this value is flagged as a bound violation.
VIOLATION_GAP = -1e-9

VIOLATION_GAP_NOTE = (
    "violation threshold -1e-9 sits one order above the 1e-10 "
    "probability/eigensolver noise floor"
)

DEFAULT_RENYI_ALPHAS = (2.0, 3.0, 5.0)
DEFAULT_TSALLIS_ALPHAS = (0.5, 1.0, 1.5, 2.0)

_CHUNK = 1024


class FloorDomainWarning(UserWarning):
    """The floor index stepped outside the integer range of the
    Harremoes-Topsoe theorem (happens only at the uniform boundary, where
    the limiting bound value is still exact)."""


def _check_d(d) -> int:
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValidationError(f"dimension must be an integer >= 2, got {d!r}")
    return int(d)


def _check_kappa(d: int, kappa) -> None:
    k = np.asarray(kappa, dtype=np.float64)
    if np.any(k <= 1.0 / d) or np.any(k > 1.0 + 1e-12):
        raise ValidationError(f"kappa must lie in (1/{d}, 1], got {kappa!r}")


def _scalar_if(x, *inputs):
    if all(np.isscalar(v) for v in inputs):
        return float(x)
    return x


def shannon_bound(d: int, kappa, purity=1.0):
    """Average-Shannon lower bound log2((d+1)/C(kappa, purity)) in bits.

    With the default purity = 1 this is the state-independent form
    log2((d+1)/(kappa+1)); smaller purity only raises the bound.
    """
    d = _check_d(d)
    c = coincidence_closed_form(d, kappa, purity)
    return _scalar_if(np.log2((d + 1.0) / np.asarray(c)), kappa, purity)


def ht_bound_total(d: int, c_upper):
    """Harremoes-Topsoe lower bound on the total Shannon entropy, in bits.

    For an upper bound C on the total index of coincidence over the d + 1
    measurements: with h = floor((d+1)/C) and fractional part w,

        total >= w C (h+1) log2(h+1) + (1-w) C h log2(h).

    Dominates the log form: dividing by d + 1 stays >= log2((d+1)/C).
    """
    d = _check_d(d)
    c = np.asarray(c_upper, dtype=np.float64)
    if np.any(c < (d + 1.0) / d - 1e-12) or np.any(c > d + 1.0 + 1e-12):
        raise ValidationError(
            f"C must lie in [(d+1)/d, d+1] = [{(d + 1) / d:.6g}, {d + 1}], got {c_upper!r}"
        )
    r = (d + 1.0) / c
    h = np.floor(r)
    if np.any(h < 1):
        raise ValidationError(f"floor index below 1 for C = {c_upper!r}")
    if np.any(h > d - 1):
        warnings.warn(
            f"floor index reached {int(np.max(h))} > d-1 = {d - 1} (uniform "
            "boundary); the limiting bound value is exact there",
            FloorDomainWarning,
            stacklevel=2,
        )
    w = r - h
    total = w * c * (h + 1.0) * np.log2(h + 1.0) + (1.0 - w) * c * h * np.log2(h)
    return _scalar_if(total, c_upper)


def ht_bound_state_independent(d: int, kappa):
    """State-independent averaged Harremoes-Topsoe bound, in bits.

    Closed form with h = floor((d+1)/(kappa+1)):

        log2(h) + [1 - ((kappa+1)/(d+1)) h] (h+1) log2(1 + 1/h)

    Algebraically identical to ht_bound_total(d, kappa+1)/(d+1); the test
    suite asserts the identity rather than assuming it.
    """
    d = _check_d(d)
    _check_kappa(d, kappa)
    k = np.asarray(kappa, dtype=np.float64)
    h = np.floor((d + 1.0) / (k + 1.0))
    bound = np.log2(h) + (1.0 - (k + 1.0) / (d + 1.0) * h) * (h + 1.0) * np.log2(
        1.0 + 1.0 / h
    )
    return _scalar_if(bound, kappa)


def renyi_bound(d: int, kappa, alpha: float, purity=1.0):
    """Average-Renyi lower bound (alpha/(2(1-alpha))) ln(C/(d+1)), in nats.

    Valid for alpha >= 2 (the inequality is established on [2, inf)).
    """
    d = _check_d(d)
    a = float(alpha)
    if not (math.isinf(a) or a >= 2.0):
        raise ValidationError(f"alpha must be >= 2, got {alpha!r}")
    if math.isinf(a):
        return min_entropy_bound(d, kappa, purity)
    c = np.asarray(coincidence_closed_form(d, kappa, purity), dtype=np.float64)
    bound = (a / (2.0 * (1.0 - a))) * np.log(c / (d + 1.0))
    return _scalar_if(bound, kappa, purity)


def max_prob_bound(d: int, x):
    """Concave increasing map (1 + sqrt(d-1) sqrt(x d - 1))/d.

    Bounds the largest outcome probability of a distribution over d
    outcomes whose index of coincidence is x; needs x >= 1/d.
    """
    d = _check_d(d)
    xv = np.asarray(x, dtype=np.float64)
    if np.any(xv < 1.0 / d - 1e-12):
        raise ValidationError(f"x must be >= 1/{d}, got {x!r}")
    inner = np.maximum(xv * d - 1.0, 0.0)
    return _scalar_if((1.0 + np.sqrt(d - 1.0) * np.sqrt(inner)) / d, x)


def min_entropy_bound(d: int, kappa, purity=1.0):
    """Average min-entropy lower bound -ln g(C/(d+1)) in nats.

    g is ``max_prob_bound``; C/(d+1) >= 1/d holds automatically, so the
    square-root domain is safe for every valid (kappa, purity).
    """
    d = _check_d(d)
    c = np.asarray(coincidence_closed_form(d, kappa, purity), dtype=np.float64)
    return _scalar_if(-np.log(max_prob_bound(d, c / (d + 1.0))), kappa, purity)


def tsallis_bound(d: int, kappa, alpha: float, purity=1.0):
    """Average-Tsallis lower bound ln_alpha((d+1)/C) for 0 < alpha <= 2.

    alpha = 1 routes to the natural-log Shannon bound ln((d+1)/C).
    """
    d = _check_d(d)
    a = float(alpha)
    if not 0.0 < a <= 2.0:
        raise ValidationError(f"alpha must lie in (0, 2], got {alpha!r}")
    c = np.asarray(coincidence_closed_form(d, kappa, purity), dtype=np.float64)
    ratio = (d + 1.0) / c
    if a == 1.0:
        return _scalar_if(np.log(ratio), kappa, purity)
    return _scalar_if(alpha_log(ratio, a), kappa, purity)


def sic_ht_bound(d: int, c_upper):
    """Harremoes-Topsoe bound for a single general SIC measurement, bits.

    For an upper bound C on the index of coincidence of the d^2-outcome
    distribution: h = floor(1/C), w = 1/C - h, and

        H >= w C (h+1) log2(h+1) + (1-w) C h log2(h).
    """
    d = _check_d(d)
    c = np.asarray(c_upper, dtype=np.float64)
    if np.any(c < 1.0 / d**2 - 1e-12) or np.any(c >= 1.0):
        raise ValidationError(
            f"C must lie in [1/d^2, 1) = [{1.0 / d**2:.6g}, 1), got {c_upper!r}"
        )
    r = 1.0 / c
    h = np.floor(r)
    if np.any(h < 1):
        raise ValidationError(f"floor index below 1 for C = {c_upper!r}")
    if np.any(h > d * d - 1):
        warnings.warn(
            f"floor index reached {int(np.max(h))} > d^2-1 = {d * d - 1} "
            "(uniform boundary); the limiting bound value is exact there",
            FloorDomainWarning,
            stacklevel=2,
        )
    w = r - h
    total = w * c * (h + 1.0) * np.log2(h + 1.0) + (1.0 - w) * c * h * np.log2(h)
    return _scalar_if(total, c_upper)


# ---------------------------------------------------------------------------
# Sweep machinery


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluated against one state."""

    bound_name: str
    base: str  # "bits" or "nats"
    d: int
    kappa_or_a: float
    alpha: float | None
    purity: float
    bound: float
    achieved: float
    gap: float
    violated: bool


@dataclass(frozen=True)
class BoundStats:
    """Aggregate of one bound over a sweep."""

    bound_name: str
    base: str
    alpha: float | None
    n_states: int
    min_gap: float
    mean_gap: float
    violations: int


@dataclass(frozen=True)
class SweepResult:
    kind: str  # "mum" or "sic"
    d: int
    parameter: float  # kappa for MUM sets, a for SIC sets
    n_states: int
    seed: int
    ranks: str
    stats: tuple[BoundStats, ...]
    reports: tuple[BoundReport, ...] | None = None
    violation_gap: float = VIOLATION_GAP

    @property
    def total_violations(self) -> int:
        return sum(s.violations for s in self.stats)

    def summary_lines(self) -> list[str]:
        lines = [
            f"states={self.n_states} violations={self.total_violations} "
            f"(gap threshold {self.violation_gap:.12g})"
        ]
        for s in self.stats:
            alpha = "" if s.alpha is None else f" alpha={s.alpha:.12g}"
            lines.append(
                f"bound={s.bound_name}{alpha} base={s.base} "
                f"min_gap={s.min_gap:.12g} mean_gap={s.mean_gap:.12g} "
                f"violations={s.violations}"
            )
        return lines


def flag_violations(gaps, violation_gap: float = VIOLATION_GAP) -> np.ndarray:
    """Boolean mask of gaps that cross the violation threshold."""
    return np.asarray(gaps, dtype=np.float64) < violation_gap


def _state_purities(rhos: np.ndarray) -> np.ndarray:
    return np.einsum("sij,sij->s", rhos, rhos.conj()).real


def _evaluate_batch(measurements, rhos, renyi_alphas, tsallis_alphas):
    """Bounds and achieved average entropies for a batch of states.

    Returns (meta, bounds, achieved, purities) where meta is a list of
    (bound_name, base, alpha) and the arrays have shape (B, len(meta)).
    """
    rhos = np.ascontiguousarray(rhos, dtype=np.complex128)
    n = rhos.shape[0]
    purities = _state_purities(rhos)
    meta: list[tuple[str, str, float | None]] = []
    bounds: list[np.ndarray] = []
    achieved: list[np.ndarray] = []

    def add(name, base, alpha, bound_vals, achieved_vals):
        meta.append((name, base, alpha))
        bounds.append(np.broadcast_to(np.asarray(bound_vals, dtype=np.float64), (n,)))
        achieved.append(np.asarray(achieved_vals, dtype=np.float64))

    if isinstance(measurements, MumSet):
        d = measurements.d
        probs = clamp_probabilities(
            kernels.measure_batch(measurements.elements.reshape(-1, d, d), rhos)
        )
        rows = probs.reshape(n * (d + 1), d)

        def per_state(values):
            return values.reshape(n, d + 1).mean(axis=1)

        h_nats = per_state(kernels.shannon_rows(rows))
        h_bits = h_nats / _LN2
        kappa = measurements.kappa
        c_sd = coincidence_closed_form(d, kappa, purities)

        add("shannon_log", "bits", None, shannon_bound(d, kappa, purities), h_bits)
        add("shannon_log_si", "bits", None, shannon_bound(d, kappa), h_bits)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FloorDomainWarning)
            ht_sd = ht_bound_total(d, c_sd) / (d + 1.0)
        add("shannon_ht", "bits", None, ht_sd, h_bits)
        add("shannon_ht_si", "bits", None, ht_bound_state_independent(d, kappa), h_bits)
        for alpha in renyi_alphas:
            r_a = per_state(kernels.renyi_rows(rows, float(alpha)))
            add("renyi", "nats", float(alpha), renyi_bound(d, kappa, alpha, purities), r_a)
            add("renyi_si", "nats", float(alpha), renyi_bound(d, kappa, alpha), r_a)
        r_inf = per_state(kernels.min_entropy_rows(rows))
        add("min_entropy", "nats", math.inf, min_entropy_bound(d, kappa, purities), r_inf)
        add("min_entropy_si", "nats", math.inf, min_entropy_bound(d, kappa), r_inf)
        for alpha in tsallis_alphas:
            a = float(alpha)
            t_a = h_nats if a == 1.0 else per_state(kernels.tsallis_rows(rows, a))
            add("tsallis", "nats", a, tsallis_bound(d, kappa, a, purities), t_a)
            add("tsallis_si", "nats", a, tsallis_bound(d, kappa, a), t_a)
    elif isinstance(measurements, SicSet):
        d = measurements.d
        probs = clamp_probabilities(kernels.measure_batch(measurements.elements, rhos))
        h_bits = kernels.shannon_rows(probs) / _LN2
        a_par = measurements.a
        c_sd = sic_coincidence_closed_form(d, a_par, purities)
        c_si = sic_coincidence_closed_form(d, a_par, 1.0)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FloorDomainWarning)
            sd = sic_ht_bound(d, c_sd)
        add("sic_ht", "bits", None, sd, h_bits)
        add("sic_ht_si", "bits", None, sic_ht_bound(d, c_si), h_bits)
    else:
        raise ValidationError(
            f"measurements must be a MumSet or SicSet, got {type(measurements).__name__}"
        )

    return meta, np.column_stack(bounds), np.column_stack(achieved), purities


def evaluate_states(
    measurements,
    rhos,
    renyi_alphas=DEFAULT_RENYI_ALPHAS,
    tsallis_alphas=DEFAULT_TSALLIS_ALPHAS,
) -> list[BoundReport]:
    """Evaluate every applicable bound against explicit states.

    ``rhos`` is a single (d, d) density matrix or a stack of them. Reports
    come back state-major: all bounds for state 0, then state 1, and so on.
    """
    arr = np.asarray(rhos, dtype=np.complex128)
    if arr.ndim == 2:
        arr = arr[None, :, :]
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValidationError(f"states must be (n, d, d), got shape {arr.shape}")
    meta, bounds, achieved, purities = _evaluate_batch(
        measurements, arr, renyi_alphas, tsallis_alphas
    )
    d = measurements.d
    parameter = measurements.kappa if isinstance(measurements, MumSet) else measurements.a
    gaps = achieved - bounds
    flags = flag_violations(gaps)
    reports = []
    for s in range(arr.shape[0]):
        for i, (name, base, alpha) in enumerate(meta):
            reports.append(
                BoundReport(
                    bound_name=name,
                    base=base,
                    d=d,
                    kappa_or_a=parameter,
                    alpha=alpha,
                    purity=float(purities[s]),
                    bound=float(bounds[s, i]),
                    achieved=float(achieved[s, i]),
                    gap=float(gaps[s, i]),
                    violated=bool(flags[s, i]),
                )
            )
    return reports


def _resolve_ranks(ranks, d: int) -> str | int:
    if ranks == "mixed":
        return "mixed"
    try:
        r = int(ranks)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"ranks must be 'mixed' or an integer, got {ranks!r}") from exc
    if not 1 <= r <= d:
        raise ValidationError(f"rank must lie in [1, {d}], got {r}")
    return r


def sample_states(d: int, start: int, count: int, ranks, seed: int) -> np.ndarray:
    """Sample states ``start .. start+count-1`` of a deterministic stream.

    State index s uses its own generator seeded by (seed, s), so any slice
    of the stream can be produced independently of chunking or worker
    layout; ranks = "mixed" cycles ranks 1..d with the index.
    """
    ranks = _resolve_ranks(ranks, d)
    out = np.empty((count, d, d), dtype=np.complex128)
    for i in range(count):
        idx = start + i
        rank = (idx % d) + 1 if ranks == "mixed" else ranks
        rng = np.random.default_rng([seed, idx])
        out[i] = random_density_matrix(d, rank, rng)
    return out


def _sweep_chunk(args):
    (measurements, start, count, ranks, seed, renyi_alphas, tsallis_alphas, keep) = args
    rhos = sample_states(measurements.d, start, count, ranks, seed)
    meta, bounds, achieved, purities = _evaluate_batch(
        measurements, rhos, renyi_alphas, tsallis_alphas
    )
    gaps = achieved - bounds
    agg = (
        gaps.min(axis=0),
        gaps.sum(axis=0),
        flag_violations(gaps).sum(axis=0),
    )
    if keep:
        return meta, agg, (bounds, achieved, gaps, purities)
    return meta, agg, None


def verify_bounds(
    measurements,
    n_states: int,
    ranks="mixed",
    seed: int = 0,
    workers: int = 1,
    renyi_alphas=DEFAULT_RENYI_ALPHAS,
    tsallis_alphas=DEFAULT_TSALLIS_ALPHAS,
    keep_reports: bool = False,
) -> SweepResult:
    """Monte Carlo verification of every applicable bound on random states.

    States are sampled deterministically from (seed, state index), so the
    result is identical for any ``workers`` count; chunks are merged in
    state order. With ``keep_reports`` the per-state BoundReport rows are
    retained for export (memory scales with n_states).

    Parameters
    ----------
    measurements : MumSet or SicSet
    n_states : int
        Number of random states to draw.
    ranks : "mixed" or int
        "mixed" cycles ranks 1..d along the stream; an integer fixes it.
    seed : int
        Base seed; must be a nonnegative integer.
    workers : int
        Process count for chunk evaluation. Purely a wall-time knob.
    """
    if not isinstance(n_states, (int, np.integer)) or n_states < 1:
        raise ValidationError(f"n_states must be a positive integer, got {n_states!r}")
    if not isinstance(seed, (int, np.integer)) or seed < 0:
        raise ValidationError(f"seed must be a nonnegative integer, got {seed!r}")
    if not isinstance(workers, (int, np.integer)) or workers < 1:
        raise ValidationError(f"workers must be a positive integer, got {workers!r}")
    d = measurements.d
    ranks = _resolve_ranks(ranks, d)
    for alpha in renyi_alphas:
        if not (math.isinf(float(alpha)) or float(alpha) >= 2.0):
            raise ValidationError(f"Renyi grid needs alpha >= 2, got {alpha!r}")
    for alpha in tsallis_alphas:
        if not 0.0 < float(alpha) <= 2.0:
            raise ValidationError(f"Tsallis grid needs alpha in (0, 2], got {alpha!r}")

    tasks = [
        (
            measurements,
            start,
            min(_CHUNK, n_states - start),
            ranks,
            int(seed),
            tuple(renyi_alphas),
            tuple(tsallis_alphas),
            keep_reports,
        )
        for start in range(0, n_states, _CHUNK)
    ]
    if workers == 1 or len(tasks) == 1:
        results = [_sweep_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=int(workers)) as pool:
            results = list(pool.map(_sweep_chunk, tasks))

    meta = results[0][0]
    nb = len(meta)
    min_gap = np.full(nb, np.inf)
    sum_gap = np.zeros(nb)
    violations = np.zeros(nb, dtype=np.int64)
    kept = []
    for _, (mins, sums, viol), rows in results:
        min_gap = np.minimum(min_gap, mins)
        sum_gap += sums
        violations += viol
        if keep_reports:
            kept.append(rows)

    stats = tuple(
        BoundStats(
            bound_name=name,
            base=base,
            alpha=alpha,
            n_states=int(n_states),
            min_gap=float(min_gap[i]),
            mean_gap=float(sum_gap[i] / n_states),
            violations=int(violations[i]),
        )
        for i, (name, base, alpha) in enumerate(meta)
    )

    reports = None
    if keep_reports:
        parameter = measurements.kappa if isinstance(measurements, MumSet) else measurements.a
        rows = []
        for bounds_arr, achieved_arr, gaps_arr, purities in kept:
            flags = flag_violations(gaps_arr)
            for s in range(bounds_arr.shape[0]):
                for i, (name, base, alpha) in enumerate(meta):
                    rows.append(
                        BoundReport(
                            bound_name=name,
                            base=base,
                            d=d,
                            kappa_or_a=parameter,
                            alpha=alpha,
                            purity=float(purities[s]),
                            bound=float(bounds_arr[s, i]),
                            achieved=float(achieved_arr[s, i]),
                            gap=float(gaps_arr[s, i]),
                            violated=bool(flags[s, i]),
                        )
                    )
        reports = tuple(rows)

    return SweepResult(
        kind="mum" if isinstance(measurements, MumSet) else "sic",
        d=d,
        parameter=measurements.kappa if isinstance(measurements, MumSet) else measurements.a,
        n_states=int(n_states),
        seed=int(seed),
        ranks=str(ranks),
        stats=stats,
        reports=reports,
    )


# ---------------------------------------------------------------------------
# Serialization

CSV_COLUMNS = (
    "bound_name",
    "base",
    "d",
    "kappa_or_a",
    "alpha",
    "purity",
    "bound",
    "achieved",
    "gap",
    "violated",
)


def _fmt_alpha(alpha: float | None) -> str:
    if alpha is None:
        return ""
    return repr(float(alpha)) if math.isfinite(alpha) else "inf"


def reports_to_csv(reports, fh) -> None:
    """Write BoundReport rows as CSV.

    Floats are written with ``repr`` so parsing the file recovers the
    in-process values exactly (and reruns are byte-identical).
    """
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            (
                r.bound_name,
                r.base,
                r.d,
                repr(r.kappa_or_a),
                _fmt_alpha(r.alpha),
                repr(r.purity),
                repr(r.bound),
                repr(r.achieved),
                repr(r.gap),
                "true" if r.violated else "false",
            )
        )


def reports_to_csv_string(reports) -> str:
    buf = io.StringIO()
    reports_to_csv(reports, buf)
    return buf.getvalue()


def reports_from_csv(fh) -> list[BoundReport]:
    """Parse rows written by ``reports_to_csv``."""
    reader = csv.DictReader(fh)
    out = []
    for row in reader:
        alpha = row["alpha"]
        out.append(
            BoundReport(
                bound_name=row["bound_name"],
                base=row["base"],
                d=int(row["d"]),
                kappa_or_a=float(row["kappa_or_a"]),
                alpha=None if alpha == "" else float(alpha),
                purity=float(row["purity"]),
                bound=float(row["bound"]),
                achieved=float(row["achieved"]),
                gap=float(row["gap"]),
                violated=row["violated"] == "true",
            )
        )
    return out


def report_to_dict(r: BoundReport) -> dict:
    return {
        "bound_name": r.bound_name,
        "base": r.base,
        "d": r.d,
        "kappa_or_a": r.kappa_or_a,
        "alpha": None if r.alpha is None else (r.alpha if math.isfinite(r.alpha) else "inf"),
        "purity": r.purity,
        "bound": r.bound,
        "achieved": r.achieved,
        "gap": r.gap,
        "violated": r.violated,
    }


def sweep_to_json(result: SweepResult) -> dict:
    """JSON form of a sweep: run metadata header plus report rows."""
    return {
        "kind": result.kind,
        "d": result.d,
        "parameter": result.parameter,
        "n_states": result.n_states,
        "seed": result.seed,
        "ranks": result.ranks,
        "violation_gap": result.violation_gap,
        "violation_gap_note": VIOLATION_GAP_NOTE,
        "stats": [
            {
                "bound_name": s.bound_name,
                "base": s.base,
                "alpha": None if s.alpha is None else (s.alpha if math.isfinite(s.alpha) else "inf"),
                "n_states": s.n_states,
                "min_gap": s.min_gap,
                "mean_gap": s.mean_gap,
                "violations": s.violations,
            }
            for s in result.stats
        ],
        "reports": [report_to_dict(r) for r in (result.reports or ())],
    }


def bound_table(
    d: int,
    kappa: float | None = None,
    a: float | None = None,
    purity: float = 1.0,
    renyi_alphas=DEFAULT_RENYI_ALPHAS,
    tsallis_alphas=DEFAULT_TSALLIS_ALPHAS,
) -> list[BoundReport]:
    """All applicable bounds at explicit parameters, without states.

    Exactly one of ``kappa`` (complete MUM set) or ``a`` (general SIC) must
    be given. The achieved/gap/violated fields are not meaningful without a
    state and are filled with NaN/False.
    """
    d = _check_d(d)
    if (kappa is None) == (a is None):
        raise ValidationError("exactly one of kappa or a must be given")
    rows: list[BoundReport] = []

    def add(name, base, alpha, value):
        rows.append(
            BoundReport(
                bound_name=name,
                base=base,
                d=d,
                kappa_or_a=float(kappa if kappa is not None else a),
                alpha=alpha,
                purity=float(purity),
                bound=float(value),
                achieved=math.nan,
                gap=math.nan,
                violated=False,
            )
        )

    if kappa is not None:
        c = coincidence_closed_form(d, kappa, purity)
        add("shannon_log", "bits", None, shannon_bound(d, kappa, purity))
        add("shannon_log_si", "bits", None, shannon_bound(d, kappa))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FloorDomainWarning)
            add("shannon_ht", "bits", None, ht_bound_total(d, c) / (d + 1.0))
        add("shannon_ht_si", "bits", None, ht_bound_state_independent(d, kappa))
        for alpha in renyi_alphas:
            add("renyi", "nats", float(alpha), renyi_bound(d, kappa, alpha, purity))
            add("renyi_si", "nats", float(alpha), renyi_bound(d, kappa, alpha))
        add("min_entropy", "nats", math.inf, min_entropy_bound(d, kappa, purity))
        add("min_entropy_si", "nats", math.inf, min_entropy_bound(d, kappa))
        for alpha in tsallis_alphas:
            add("tsallis", "nats", float(alpha), tsallis_bound(d, kappa, alpha, purity))
            add("tsallis_si", "nats", float(alpha), tsallis_bound(d, kappa, alpha))
    else:
        c_sd = sic_coincidence_closed_form(d, a, purity)
        c_si = sic_coincidence_closed_form(d, a, 1.0)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FloorDomainWarning)
            add("sic_ht", "bits", None, sic_ht_bound(d, c_sd))
            add("sic_ht_si", "bits", None, sic_ht_bound(d, c_si))
    return rows
