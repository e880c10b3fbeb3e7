"""Construction and validation of complete MUM sets."""

import json

import numpy as np
import pytest

from mumkit import (
    ValidationError,
    build_f_operators,
    build_mums,
    coincidence_bruteforce,
    coincidence_closed_form,
    gellmann_basis,
    hermitian_eigenvalues,
    kappa_from_t,
    max_t,
    measure,
    mums_from_json,
    mums_to_json,
    random_density_matrix,
    validate_mums,
)

DIMS = [2, 3, 4, 5, 6]


@pytest.mark.parametrize("d", DIMS)
def test_f_operators_are_traceless_and_sum_to_zero(d):
    f = build_f_operators(gellmann_basis(d))
    assert f.shape == (d + 1, d, d, d)
    for b in range(d + 1):
        assert np.abs(f[b].sum(axis=0)).max() < 1e-12
        for n in range(d):
            assert abs(np.trace(f[b, n])) < 1e-12
            assert np.allclose(f[b, n], f[b, n].conj().T)


def test_qubit_f_operators_by_hand():
    """d=2: each group holds one unit-norm operator g, and the building
    blocks collapse to -(1+sqrt(2)) g and +(1+sqrt(2)) g."""
    basis = gellmann_basis(2)
    f = build_f_operators(basis)
    c = 1.0 + np.sqrt(2.0)
    for b in range(3):
        g = basis.groups[b, 0]
        assert np.allclose(f[b, 0], -c * g, atol=1e-13)
        assert np.allclose(f[b, 1], c * g, atol=1e-13)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_f_operator_pair_traces(d):
    """Within one group: Tr(F_n F_n) = (1+sqrt(d))^2 (d-1) and the cross
    terms all equal -(1+sqrt(d))^2."""
    f = build_f_operators(gellmann_basis(d))
    scale = (1.0 + np.sqrt(d)) ** 2
    for b in range(d + 1):
        for n in range(d):
            assert abs(np.trace(f[b, n] @ f[b, n]).real - scale * (d - 1)) < 1e-9
            for m in range(n + 1, d):
                assert abs(np.trace(f[b, n] @ f[b, m]).real + scale) < 1e-9


def test_qubit_max_t_hand_value():
    assert max_t(2) == pytest.approx(1.0 / (2.0 + np.sqrt(2.0)), abs=1e-12)


@pytest.mark.parametrize("d", DIMS)
def test_validate_passes_at_several_t(d):
    tmax = max_t(d)
    for t in (tmax, tmax / 2, tmax / 7):
        mums = build_mums(d, t)
        report = validate_mums(mums)
        assert report.passed, report.lines()
        assert mums.kappa == pytest.approx(kappa_from_t(d, t), abs=1e-15)


@pytest.mark.parametrize("d", DIMS)
def test_max_t_is_maximal(d):
    """At t_max every element is PSD; slightly beyond, one is not."""
    tmax = max_t(d)
    mums = build_mums(d, tmax)
    smallest = min(
        hermitian_eigenvalues(mums.elements[b, n]).min()
        for b in range(d + 1)
        for n in range(d)
    )
    assert smallest > -1e-12
    f = build_f_operators(gellmann_basis(d))
    beyond = np.eye(d) / d + (tmax * 1.01) * f
    worst = min(
        hermitian_eigenvalues(beyond[b, n]).min()
        for b in range(d + 1)
        for n in range(d)
    )
    assert worst < -1e-13


def test_qubit_at_max_t_reproduces_pauli_mubs():
    """d=2 at t_max degenerates to the three Pauli bases, kappa = 1."""
    mums = build_mums(2, "max")
    assert abs(mums.kappa - 1.0) < 1e-12
    paulis = [
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ]
    projectors = []
    for sigma in paulis:
        projectors.append({s: (np.eye(2) + s * sigma) / 2 for s in (+1, -1)})
    for b in range(3):
        for n in range(2):
            element = mums.elements[b, n]
            dev = min(
                np.abs(element - proj).max()
                for basis in projectors
                for proj in basis.values()
            )
            assert dev < 1e-9
    # and each measurement uses exactly one Pauli basis
    for b in range(3):
        overlap = np.trace(mums.elements[b, 0] @ mums.elements[b, 1]).real
        assert abs(overlap) < 1e-9


@pytest.mark.parametrize("d", [3, 4, 5])
def test_trace_identities_directly(d):
    """Pairwise trace identities recomputed with plain np.trace."""
    mums = build_mums(d, max_t(d) / 3)
    k, dd = mums.kappa, float(d)
    for b in range(d + 1):
        for n in range(d):
            assert np.trace(mums.elements[b, n]).real == pytest.approx(1.0, abs=1e-12)
            for m in range(d):
                got = np.trace(mums.elements[b, n] @ mums.elements[b, m]).real
                want = k if n == m else (1.0 - k) / (dd - 1.0)
                assert got == pytest.approx(want, abs=1e-11)
        for b2 in range(b + 1, d + 1):
            got = np.trace(mums.elements[b, 0] @ mums.elements[b2, d - 1]).real
            assert got == pytest.approx(1.0 / dd, abs=1e-11)


def test_t_range_errors():
    with pytest.raises(ValidationError, match="t must lie in"):
        build_mums(3, 0.0)
    with pytest.raises(ValidationError, match="t must lie in"):
        build_mums(3, -0.1)
    with pytest.raises(ValidationError, match="t exceeds t_max"):
        build_mums(2, 0.9)
    with pytest.raises(ValidationError):
        build_mums(1, "max")


def test_measure_uniform_on_maximally_mixed():
    for d in (2, 4):
        mums = build_mums(d, "max")
        probs = measure(mums, np.eye(d) / d)
        assert probs.shape == (d + 1, d)
        assert np.abs(probs - 1.0 / d).max() < 1e-12


def test_qubit_eigenstate_probability_table():
    """At t_max the qubit construction is the Pauli MUB set, so a z
    eigenstate gives one deterministic row and two unbiased ones."""
    mums = build_mums(2, "max")
    rho = np.diag([1.0, 0.0]).astype(complex)
    probs = measure(mums, rho)
    rows = sorted(tuple(np.round(row, 9)) for row in probs)
    assert rows == [(0.0, 1.0), (0.5, 0.5), (0.5, 0.5)]
    assert coincidence_bruteforce(probs) == pytest.approx(2.0, abs=1e-12)


def test_measure_rows_normalize():
    mums = build_mums(3, max_t(3) / 2)
    rho = random_density_matrix(3, seed=8)
    probs = measure(mums, rho)
    assert np.allclose(probs.sum(axis=1), 1.0, atol=1e-12)
    assert probs.min() > -1e-12


@pytest.mark.parametrize("d", [2, 3, 5])
def test_closed_form_matches_bruteforce(d):
    tmax = max_t(d)
    for t in (tmax, tmax / 4):
        mums = build_mums(d, t)
        for s in range(6):
            rho = random_density_matrix(d, rank=(s % d) + 1, seed=s)
            brute = coincidence_bruteforce(mums, rho)
            pur = np.trace(rho @ rho).real
            closed = coincidence_closed_form(d, mums.kappa, pur)
            assert abs(brute - closed) < 1e-12


def test_coincidence_degenerations():
    # pure state: C = kappa + 1
    for d in (2, 3, 6):
        for frac in (1.0, 0.5, 0.25):
            k = kappa_from_t(d, max_t(d) * frac)
            assert coincidence_closed_form(d, k, 1.0) == pytest.approx(k + 1.0, abs=1e-12)
    # kappa = 1 (qubit at t_max): C = purity + 1
    for pur in np.linspace(0.5, 1.0, 7):
        assert coincidence_closed_form(2, 1.0, pur) == pytest.approx(pur + 1.0, abs=1e-12)
    # maximally mixed: C = (d+1)/d regardless of kappa
    for d in (2, 4, 6):
        k = kappa_from_t(d, max_t(d) / 2)
        assert coincidence_closed_form(d, k, 1.0 / d) == pytest.approx(
            (d + 1.0) / d, abs=1e-12
        )


def test_coincidence_closed_form_validates_ranges():
    with pytest.raises(ValidationError):
        coincidence_closed_form(3, 0.2, 1.0)  # kappa <= 1/d
    with pytest.raises(ValidationError):
        coincidence_closed_form(3, 0.5, 0.1)  # purity < 1/d
    with pytest.raises(ValidationError):
        coincidence_closed_form(3, 0.5, 1.2)


def test_json_round_trip_is_exact():
    mums = build_mums(3, max_t(3) / 2)
    data = json.loads(json.dumps(mums_to_json(mums)))
    back = mums_from_json(data)
    assert back.d == mums.d
    assert back.t == mums.t
    assert back.kappa == mums.kappa
    assert np.array_equal(back.elements, mums.elements)


def test_import_rejects_corrupted_elements():
    mums = build_mums(2, "max")
    data = mums_to_json(mums)
    data["elements"][0][0]["re"][0][0] += 1e-6
    with pytest.raises(ValidationError, match="fails validation"):
        mums_from_json(data)


def test_import_rejects_wrong_shape():
    mums = build_mums(2, "max")
    data = mums_to_json(mums)
    del data["elements"][0]
    with pytest.raises(ValidationError):
        mums_from_json(data)


def test_validation_report_lines_are_readable():
    report = validate_mums(build_mums(2, "max"))
    lines = report.lines()
    assert len(lines) == len(report.checks)
    assert all("max deviation" in line for line in lines)
    names = [c.name for c in report.checks]
    assert "cross_measurement_overlap" in names
    assert "positivity" in names
