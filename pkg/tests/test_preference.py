import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqseverity.exceptions import ParameterRangeError, WeightError
from pqseverity.preference import check_weights, high_band_profile, preference_weights, uniform_profile


def closed_form(order, intensity):
    """Row geometric means of I**((O_j - O_i)/D) reduce to I**(-O_i/D) up to a common factor."""
    O = np.asarray(order, dtype=float)
    w = intensity ** (-O / (len(O) - 1))
    return w / w.sum()


orders = st.integers(2, 10).flatmap(lambda n: st.permutations(list(range(1, n + 1))))
intensities = st.floats(1.0, 9.0)


def test_worked_example():
    w = preference_weights([1, 2, 3], 9, D=2).weights
    assert np.allclose(w, [0.6923, 0.2308, 0.0769], atol=1e-4)
    assert np.allclose(w, np.array([9, 3, 1]) / 13, atol=1e-15)


def test_swapped_ranking():
    w = preference_weights([2, 1, 3], 9, D=2).weights
    assert np.allclose(w, [0.2308, 0.6923, 0.0769], atol=1e-4)


def test_indifference_is_uniform():
    assert np.allclose(preference_weights([3, 1, 4, 2], 1).weights, 0.25, atol=0)
    assert np.allclose(uniform_profile(7).weights, 1 / 8)


def test_extreme_weights_differ_by_intensity():
    w = high_band_profile(7, 9).weights
    assert w[0] / w[-1] == pytest.approx(9.0, rel=1e-12)
    assert np.all(np.diff(w) < 0)


@settings(max_examples=200, deadline=None)
@given(order=orders, intensity=intensities)
def test_matches_closed_form(order, intensity):
    assert np.allclose(preference_weights(order, intensity).weights, closed_form(order, intensity), rtol=1e-12, atol=0)


@settings(max_examples=200, deadline=None)
@given(order=orders, intensity=intensities)
def test_normalized_and_positive(order, intensity):
    w = preference_weights(order, intensity).weights
    assert abs(w.sum() - 1.0) < 1e-12
    assert np.all(w > 0)


@settings(max_examples=200, deadline=None)
@given(order=orders, intensity=st.floats(1.001, 9.0))
def test_order_consistency(order, intensity):
    w = preference_weights(order, intensity).weights
    O = np.asarray(order)
    for i in range(len(O)):
        for j in range(len(O)):
            if O[i] < O[j]:
                assert w[i] > w[j]


@settings(max_examples=100, deadline=None)
@given(order=orders, intensity=intensities, data=st.data())
def test_permutation_equivariance(order, intensity, data):
    perm = data.draw(st.permutations(list(range(len(order)))))
    w = preference_weights(order, intensity).weights
    wp = preference_weights([order[k] for k in perm], intensity).weights
    assert np.allclose(wp, w[list(perm)], rtol=1e-12, atol=0)


@settings(max_examples=100, deadline=None)
@given(order=orders, a=intensities, b=intensities)
def test_intensity_monotone(order, a, b):
    if abs(a - b) < 1e-6:
        return
    lo, hi = sorted((a, b))
    spread = lambda I: (lambda w: w.max() / w.min())(preference_weights(order, I).weights)
    assert spread(hi) > spread(lo)


@pytest.mark.parametrize("order", [[1, 1, 2], [0, 1, 2], [1, 2, 4], [1], [1.5, 2, 3], "abc"])
def test_invalid_order(order):
    with pytest.raises(WeightError):
        preference_weights(order, 5)


@pytest.mark.parametrize("intensity", [0.5, 9.5, float("nan")])
def test_invalid_intensity(intensity):
    with pytest.raises(ParameterRangeError):
        preference_weights([1, 2, 3], intensity)


def test_depth_must_match():
    with pytest.raises(WeightError):
        preference_weights([1, 2, 3], 9, D=3)


def test_check_weights():
    check_weights([0.5, 0.5], 2)
    for bad, n in [([0.5, 0.5], 3), ([0.6, 0.6], 2), ([1.5, -0.5], 2)]:
        with pytest.raises(WeightError):
            check_weights(bad, n)
