"""Generalized Gell-Mann basis: counts, orthonormality, qubit special case."""

import numpy as np
import pytest

from mumkit import (
    ValidationError,
    gellmann_basis,
    gellmann_matrices,
    hs_inner,
    validate_operator_basis,
)

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_basis_count_and_validation(d):
    basis = gellmann_basis(d)
    assert basis.d == d
    assert basis.flat.shape == (d * d - 1, d, d)
    validate_operator_basis(basis)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_traceless_hermitian_orthonormal(d):
    flat = gellmann_matrices(d)
    for m in flat:
        assert abs(np.trace(m)) < 1e-14
        assert np.allclose(m, m.conj().T)
    gram = np.array([[hs_inner(a, b) for b in flat] for a in flat])
    assert np.allclose(gram, np.eye(len(flat)), atol=1e-12)


def test_qubit_basis_is_rescaled_paulis():
    flat = gellmann_matrices(2)
    # symmetric, antisymmetric, then diagonal; normalized to unit HS norm
    assert np.allclose(flat[0], PAULI["x"] / np.sqrt(2))
    assert np.allclose(flat[1], PAULI["y"] / np.sqrt(2))
    assert np.allclose(flat[2], PAULI["z"] / np.sqrt(2))


def test_group_layout_matches_construction():
    basis = gellmann_basis(4)
    # groups of d-1 operators per measurement index, d+1 groups
    assert basis.groups.shape == (5, 3, 4, 4)
    assert np.array_equal(basis.groups.reshape(-1, 4, 4), basis.flat)


def test_validate_rejects_corruption():
    basis = gellmann_basis(3)
    bad = basis.flat.copy()
    bad[0] = bad[0] + 0.1 * np.eye(3)
    from mumkit.gellmann import OperatorBasis

    broken = OperatorBasis(d=3, groups=bad.reshape(basis.groups.shape))
    with pytest.raises(ValidationError):
        validate_operator_basis(broken)


def test_dimension_validation():
    with pytest.raises(ValidationError):
        gellmann_basis(1)
