"""Entropy functionals on probability vectors."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mumkit import (
    ValidationError,
    alpha_log,
    index_of_coincidence,
    min_entropy,
    prob_vector,
    renyi,
    shannon,
    tsallis,
)

UNIFORM4 = np.full(4, 0.25)
SPIKE = np.array([1.0, 0.0, 0.0])


def test_prob_vector_clamps_noise():
    p = prob_vector([0.5, 0.5 + 1e-13, -1e-13])
    assert p.min() == 0.0
    assert p.sum() == pytest.approx(1.0)


def test_prob_vector_rejects_bad_input():
    with pytest.raises(ValidationError):
        prob_vector([0.7, 0.7])
    with pytest.raises(ValidationError):
        prob_vector([1.5, -0.5])
    with pytest.raises(ValidationError):
        prob_vector([])


def test_shannon_known_values():
    assert shannon(UNIFORM4) == pytest.approx(2.0)
    assert shannon(UNIFORM4, base="e") == pytest.approx(math.log(4.0))
    assert shannon(SPIKE) == 0.0


def test_shannon_base_spellings():
    assert shannon(UNIFORM4, base=2) == shannon(UNIFORM4, base="2")
    assert shannon(UNIFORM4, base=math.e) == shannon(UNIFORM4, base="e")
    with pytest.raises(ValidationError):
        shannon(UNIFORM4, base=10)


def test_renyi_special_orders():
    p = [0.5, 0.25, 0.25]
    # alpha = 2: -ln sum p^2
    assert renyi(p, 2.0) == pytest.approx(-math.log(0.375))
    # alpha -> 1 window routes to Shannon in nats
    assert renyi(p, 1.0) == pytest.approx(shannon(p, base="e"))
    assert renyi(p, math.inf) == pytest.approx(min_entropy(p))
    with pytest.raises(ValidationError):
        renyi(p, 0.0)


def test_renyi_alpha_limit_is_continuous():
    p = [0.6, 0.3, 0.1]
    h = shannon(p, base="e")
    assert abs(renyi(p, 1.0 + 2e-5) - h) < 1e-4
    assert abs(renyi(p, 1.0 - 2e-5) - h) < 1e-4


def test_tsallis_values_and_limit():
    p = [0.5, 0.5]
    # alpha = 2: 1 - sum p^2
    assert tsallis(p, 2.0) == pytest.approx(0.5)
    assert tsallis(p, 1.0) == pytest.approx(shannon(p, base="e"))
    h = shannon([0.7, 0.2, 0.1], base="e")
    assert abs(tsallis([0.7, 0.2, 0.1], 1.0 + 1e-6) - h) < 1e-5
    with pytest.raises(ValidationError):
        tsallis(p, -1.0)


def test_alpha_log_matches_natural_log_in_the_limit():
    xs = np.array([0.3, 1.0, 2.5, 7.0])
    assert np.allclose(alpha_log(xs, 1.0 + 1e-9), np.log(xs), atol=1e-7)
    assert abs(alpha_log(math.e, 1.0 + 1e-6) - 1.0) < 1e-5
    assert abs(alpha_log(math.e, 1.0 - 1e-6) - 1.0) < 1e-5
    assert alpha_log(4.0, 0.5) == pytest.approx(2.0 * (math.sqrt(4.0) - 1.0))
    with pytest.raises(ValidationError):
        alpha_log(-1.0, 0.5)
    with pytest.raises(ValidationError):
        alpha_log(2.0, 1.0)


def test_tsallis_equals_expected_alpha_log_of_surprise():
    """The order-alpha entropy is the p-weighted alpha-log of 1/p."""
    rng = np.random.default_rng(17)
    for _ in range(5):
        p = rng.dirichlet(np.ones(6))
        for alpha in (0.5, 1.5, 2.0):
            direct = float(np.sum(p * alpha_log(1.0 / p, alpha)))
            assert abs(tsallis(p, alpha) - direct) < 1e-10


def test_index_of_coincidence():
    assert index_of_coincidence(UNIFORM4) == pytest.approx(0.25)
    assert index_of_coincidence(SPIKE) == pytest.approx(1.0)


probs = st.lists(
    st.floats(min_value=1e-6, max_value=1.0), min_size=2, max_size=32
).map(lambda w: np.array(w) / np.sum(w))


@settings(deadline=None, max_examples=200)
@given(probs)
def test_entropies_are_nonnegative(p):
    assert shannon(p, base="e") >= 0.0
    assert min_entropy(p) >= -1e-15
    assert tsallis(p, 0.5) >= 0.0


@settings(deadline=None, max_examples=200)
@given(probs)
def test_renyi_is_nonincreasing_in_alpha(p):
    values = [renyi(p, a) for a in (0.5, 2.0, 3.0, 5.0)]
    values.append(min_entropy(p))
    for lo, hi in zip(values[1:], values[:-1]):
        assert lo <= hi + 1e-12


@settings(deadline=None, max_examples=200)
@given(probs)
def test_coincidence_bounds_min_entropy(p):
    # max_j p_j >= sum p_j^2, so min-entropy <= -ln(coincidence)
    assert min_entropy(p) <= -math.log(index_of_coincidence(p)) + 1e-12
