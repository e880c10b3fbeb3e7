"""Acceptance suite: every verification target at its stated tolerance.

Each test prints a single PASS/FAIL line (run with ``pytest -v -s`` to see
them on passing runs; pytest shows captured output for failures anyway).

One check fails by construction: the bound-direction test asserts that the
state-independent bounds are non-decreasing in kappa, and they are not;
every coincidence ceiling grows with kappa, so all of these bounds
strictly decrease. The test states the expectation it was given and
reports the measured direction rather than asserting the opposite.
"""

import math
import time

import numpy as np

from mumkit import (
    build_mums,
    coincidence_closed_form,
    depolarized_sic,
    evaluate_states,
    ht_bound_state_independent,
    ht_bound_total,
    kappa_from_t,
    kernels,
    max_t,
    min_entropy_bound,
    renyi_bound,
    shannon_bound,
    sic_coincidence_closed_form,
    sic_measure,
    random_density_matrix,
    tetrahedron_sic,
    tsallis_bound,
    validate_mums,
    validate_sic,
    verify_bounds,
)
from mumkit.bounds import sample_states

DIMS = (2, 3, 4, 5, 6)


def _verdict(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_01_coincidence_closed_form_matches_bruteforce():
    """Closed-form total coincidence vs direct sum of squared probabilities:
    5 dims x 3 efficiencies x 1000 states of mixed rank, tolerance 1e-10."""
    start = time.perf_counter()
    worst = 0.0
    for d in DIMS:
        tmax = max_t(d)
        for t in (tmax, tmax / 2, tmax / 4):
            mums = build_mums(d, t)
            rhos = sample_states(d, 0, 1000, "mixed", seed=d * 17 + 1)
            probs = kernels.measure_batch(mums.elements.reshape(-1, d, d), rhos)
            brute = kernels.coincidence_rows(probs)
            purities = np.einsum("sij,sij->s", rhos, rhos.conj()).real
            closed = coincidence_closed_form(d, mums.kappa, purities)
            worst = max(worst, float(np.max(np.abs(brute - closed))))
    elapsed = time.perf_counter() - start
    _verdict(
        "coincidence closed form vs brute force",
        worst <= 1e-10 and elapsed < 120.0,
        f"max dev {worst:.2e}, tol 1e-10, {elapsed:.1f}s",
    )


def test_02_construction_identity_suite():
    """Every constructed set passes the full identity validator at 1e-9;
    the qubit set at maximal efficiency reproduces the Pauli projector
    bases within 1e-9 with kappa = 1 within 1e-12."""
    worst = 0.0
    ok = True
    for d in DIMS:
        tmax = max_t(d)
        for t in (tmax, tmax / 2, tmax / 4):
            report = validate_mums(build_mums(d, t), tol=1e-9)
            ok &= report.passed
            worst = max(worst, report.max_deviation)

    mums = build_mums(2, "max")
    kappa_dev = abs(mums.kappa - 1.0)
    paulis = (
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    )
    projector_dev = 0.0
    for b in range(3):
        for n in range(2):
            dev = min(
                np.abs(mums.elements[b, n] - (np.eye(2) + s * sigma) / 2).max()
                for sigma in paulis
                for s in (1.0, -1.0)
            )
            projector_dev = max(projector_dev, dev)
    _verdict(
        "construction identity suite + qubit projector degeneration",
        ok and worst <= 1e-9 and projector_dev <= 1e-9 and kappa_dev <= 1e-12,
        f"identity dev {worst:.2e}, projector dev {projector_dev:.2e}, "
        f"|kappa-1| {kappa_dev:.2e}",
    )


def test_03_coincidence_degenerations():
    """Degenerations of the closed form within 1e-12: pure states give
    kappa + 1; kappa = 1 gives purity + 1."""
    worst_pure = 0.0
    for d in DIMS:
        for t in np.linspace(max_t(d) / 10, max_t(d), 25):
            k = kappa_from_t(d, float(t))
            worst_pure = max(
                worst_pure, abs(coincidence_closed_form(d, k, 1.0) - (k + 1.0))
            )
    worst_unit = 0.0
    for pur in np.linspace(0.5, 1.0, 41):
        worst_unit = max(
            worst_unit,
            abs(coincidence_closed_form(2, 1.0, float(pur)) - (pur + 1.0)),
        )
    _verdict(
        "coincidence degenerations (purity 1; kappa 1)",
        worst_pure <= 1e-12 and worst_unit <= 1e-12,
        f"pure dev {worst_pure:.2e}, kappa-1 dev {worst_unit:.2e}",
    )


def test_04_no_violation_sweep():
    """10^4 random states per dimension at maximal efficiency: every bound
    family holds with gap >= -1e-9, zero violations."""
    start = time.perf_counter()
    total_violations = 0
    min_gap = math.inf
    for d in DIMS:
        result = verify_bounds(
            build_mums(d, "max"),
            10_000,
            ranks="mixed",
            seed=d,
            tsallis_alphas=(0.5, 1.5, 2.0),
        )
        total_violations += result.total_violations
        min_gap = min(min_gap, min(s.min_gap for s in result.stats))
    elapsed = time.perf_counter() - start
    _verdict(
        "no-violation sweep over 5 x 10^4 random states",
        total_violations == 0 and min_gap >= -1e-9 and elapsed < 600.0,
        f"violations {total_violations}, min gap {min_gap:.2e}, {elapsed:.0f}s",
    )


def test_05_tightness_witnesses():
    """(a) The maximally mixed state attains the state-dependent Shannon,
    HT, min-entropy, and Tsallis bounds with |gap| <= 1e-9 in every
    dimension; (b) a qubit measurement eigenstate at kappa = 1 attains the
    averaged-HT value 2/3 bits and the Tsallis order-2 value 1/3 within
    1e-10."""
    tight_families = {"shannon_log", "shannon_ht", "min_entropy", "tsallis"}
    worst_a = 0.0
    for d in DIMS:
        mums = build_mums(d, "max")
        for r in evaluate_states(mums, np.eye(d) / d):
            if r.bound_name in tight_families:
                worst_a = max(worst_a, abs(r.gap))

    mums2 = build_mums(2, "max")
    rho = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    rows = {(r.bound_name, r.alpha): r for r in evaluate_states(mums2, rho)}
    ht = rows[("shannon_ht_si", None)]
    ts2 = rows[("tsallis_si", 2.0)]
    dev_b = max(
        abs(ht.achieved - 2.0 / 3.0),
        abs(ht.bound - 2.0 / 3.0),
        abs(ht.gap),
        abs(ts2.bound - 1.0 / 3.0),
        abs(ts2.gap),
    )
    _verdict(
        "exact tightness witnesses",
        worst_a <= 1e-9 and dev_b <= 1e-10,
        f"mixed-state gap {worst_a:.2e}, qubit eigenstate dev {dev_b:.2e}",
    )


def test_06_stronger_form_dominance():
    """The stepwise (floor-based) bound dominates the log form: averaged
    total vs log2((d+1)/C) across a 1000-point parameter grid, and the
    state-independent pair likewise, margin >= -1e-12."""
    worst = math.inf
    pairs = 0
    for d in (2, 3, 4, 5, 6, 7, 8, 9, 10, 11):
        kappas = np.linspace(1.0 / d + 1e-9, 1.0, 100)
        si_margin = ht_bound_state_independent(d, kappas) - shannon_bound(d, kappas)
        cs = kappas + 1.0  # pure-state coincidence values span (1+1/d, 2]
        sd_margin = ht_bound_total(d, cs) / (d + 1.0) - np.log2((d + 1.0) / cs)
        worst = min(worst, float(si_margin.min()), float(sd_margin.min()))
        pairs += len(kappas)
    _verdict(
        "floor-form bounds dominate log-form bounds",
        pairs == 1000 and worst >= -1e-12,
        f"{pairs} parameter pairs, min margin {worst:+.2e}",
    )


def test_07_bound_direction_along_kappa():
    """Stated expectation: each state-independent bound is non-decreasing
    along kappa (100-point grids per dimension). Measured behavior: the
    coincidence ceiling kappa + 1 grows with kappa, so every one of these
    bounds strictly decreases; the check is kept as stated and reports the
    observed direction."""
    families = (
        ("shannon_log_si", lambda d, k: shannon_bound(d, k)),
        ("shannon_ht_si", lambda d, k: ht_bound_state_independent(d, k)),
        ("renyi_si(2)", lambda d, k: renyi_bound(d, k, 2.0)),
        ("renyi_si(3)", lambda d, k: renyi_bound(d, k, 3.0)),
        ("renyi_si(5)", lambda d, k: renyi_bound(d, k, 5.0)),
        ("min_entropy_si", lambda d, k: min_entropy_bound(d, k)),
        ("tsallis_si(0.5)", lambda d, k: tsallis_bound(d, k, 0.5)),
        ("tsallis_si(1.5)", lambda d, k: tsallis_bound(d, k, 1.5)),
        ("tsallis_si(2)", lambda d, k: tsallis_bound(d, k, 2.0)),
    )
    worst_drop = 0.0
    worst_name = ""
    nondecreasing = True
    for d in DIMS:
        kappas = np.linspace(1.0 / d + 1e-6, 1.0, 100)
        for name, fn in families:
            vals = np.array([fn(d, float(k)) for k in kappas])
            drop = float(np.min(np.diff(vals)))
            if drop < -1e-12:
                nondecreasing = False
                if drop < worst_drop:
                    worst_drop, worst_name = drop, f"{name} at d={d}"
    _verdict(
        "state-independent bounds non-decreasing in kappa",
        nondecreasing,
        f"largest decrease {worst_drop:.2e} per step in {worst_name}; "
        "bounds are in fact strictly decreasing in kappa",
    )


def test_08_sic_suite():
    """Tetrahedron validates at 1e-10; pure-qubit coincidence is 1/3 by
    formula and brute force within 1e-12; the single-measurement floor
    bound log2(3) holds on 10^4 random qubit states; depolarized sets at
    x in {0.1, ..., 1.0} all validate."""
    tet = tetrahedron_sic()
    report = validate_sic(tet, tol=1e-10)

    closed_dev = abs(sic_coincidence_closed_form(2, 0.25, 1.0) - 1.0 / 3.0)
    brute_dev = 0.0
    for s in range(10):
        p = sic_measure(tet, random_density_matrix(2, rank=1, seed=s))
        brute_dev = max(brute_dev, abs(float(p @ p) - 1.0 / 3.0))

    sweep = verify_bounds(tet, 10_000, ranks=1, seed=83)
    si = next(s for s in sweep.stats if s.bound_name == "sic_ht_si")
    bound_ok = sweep.total_violations == 0 and si.min_gap >= -1e-9

    depol_ok = all(
        validate_sic(depolarized_sic(tet, float(x))).passed
        for x in np.arange(0.1, 1.01, 0.1)
    )
    _verdict(
        "SIC suite (tetrahedron, coincidence, floor bound, depolarized family)",
        report.passed and closed_dev <= 1e-12 and brute_dev <= 1e-12
        and bound_ok and depol_ok,
        f"validate dev {report.max_deviation:.2e}, C dev "
        f"{max(closed_dev, brute_dev):.2e}, min gap {si.min_gap:.2e}",
    )


def test_09_entropy_limits_and_ordering():
    """Renyi and Tsallis approach Shannon as alpha -> 1 within 1e-5, and
    min-entropy <= collision entropy <= Shannon on 10^4 random vectors."""
    rng = np.random.default_rng(99)
    small = rng.dirichlet(np.ones(6), size=200)
    h = kernels.shannon_rows(small)
    limit_dev = 0.0
    for alpha in (1.0 - 1e-6, 1.0 + 1e-6):
        limit_dev = max(
            limit_dev,
            float(np.max(np.abs(kernels.renyi_rows(small, alpha) - h))),
            float(np.max(np.abs(kernels.tsallis_rows(small, alpha) - h))),
        )

    big = rng.dirichlet(np.ones(8), size=10_000)
    h_big = kernels.shannon_rows(big)
    r2 = kernels.renyi_rows(big, 2.0)
    rinf = kernels.min_entropy_rows(big)
    ordering_ok = bool(np.all(rinf <= r2 + 1e-12) and np.all(r2 <= h_big + 1e-12))
    _verdict(
        "entropy limits and ordering",
        limit_dev <= 1e-5 and ordering_ok,
        f"alpha->1 dev {limit_dev:.2e}, ordering on 10^4 vectors "
        f"{'holds' if ordering_ok else 'fails'}",
    )
