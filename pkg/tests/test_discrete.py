import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import binary_entropy_oracle, literal_wigner_angle
from spinboost.discrete import (
    DiscreteSpinField,
    asymptotic_entropy,
    delta_pair_field,
    discrete_density,
    four_spin_field,
    merge_fields,
    two_point_entropy,
    two_point_entropy_closed_form,
)
from spinboost.exceptions import DomainError
from spinboost.lorentz import FourMomentum, rapidity_for_wigner_angle
from spinboost.spin import SPIN_UP, bloch_vector, von_neumann_entropy

PLUS_X = np.array([1, 1]) / np.sqrt(2)


def test_single_entry_stays_pure():
    f = DiscreteSpinField.uniform([FourMomentum.on_shell(2.0, -1.0, 0.5)], PLUS_X)
    for xi in (0.0, 1.0, 6.0):
        assert von_neumann_entropy(discrete_density(f, xi)) == pytest.approx(0.0, abs=1e-10)


def test_identical_spinors_unboosted_are_pure():
    f = four_spin_field(1.3)
    np.testing.assert_allclose(discrete_density(f, 0.0), np.diag([1, 0]), atol=1e-15)


def test_four_spin_bloch_vector():
    p1, xi = 2.0, 1.7
    f = four_spin_field(p1)
    b = bloch_vector(discrete_density(f, xi))
    cosines = []
    for p in (p1, 2 * p1):
        E = np.hypot(1.0, p)
        cosines.append(np.cos(literal_wigner_angle(p / E, np.tanh(xi), np.pi / 2)))
    np.testing.assert_allclose(b, [0, 0, 0.5 * sum(cosines)], atol=1e-12)


def test_weight_validation():
    p = FourMomentum.on_shell(1, 0, 0)
    with pytest.raises(DomainError):
        DiscreteSpinField([p, p], [0.5, 0.6], [SPIN_UP, SPIN_UP])
    with pytest.raises(DomainError):
        DiscreteSpinField([p], [1.0], [[1.0, 1.0]])


def test_merge_is_convex_combination():
    f1 = four_spin_field(0.7)
    f2 = DiscreteSpinField.uniform([FourMomentum.on_shell(0.3, 1.2, -2.0)], PLUS_X)
    merged = merge_fields([f1, f2], [0.3, 0.7])
    xi = 2.2
    expected = 0.3 * discrete_density(f1, xi) + 0.7 * discrete_density(f2, xi)
    np.testing.assert_allclose(discrete_density(merged, xi), expected, atol=1e-14)


def test_two_point_examples():
    assert two_point_entropy(0.985, np.pi / 2, 0.0) == pytest.approx(0.0, abs=1e-15)
    v1, th = 0.999, np.radians(161.0)
    xi90 = rapidity_for_wigner_angle(v1, th, np.pi / 2)
    assert two_point_entropy(v1, th, xi90) == pytest.approx(1.0, abs=1e-9)
    # 30-digit reference: w = 70.4195458371 deg, H2((1 + cos w)/2)
    assert two_point_entropy(0.985, np.pi / 2, np.arctanh(0.985)) == pytest.approx(
        0.917394790691788153, abs=1e-12
    )


@settings(max_examples=100, deadline=None)
@given(v1=st.floats(0.05, 0.9999), theta=st.floats(0.01, np.pi - 0.01), xi=st.floats(0, 14))
def test_two_point_closed_form_agrees_with_matrix_path(v1, theta, xi):
    assert two_point_entropy(v1, theta, xi) == pytest.approx(
        two_point_entropy_closed_form(v1, theta, xi), abs=1e-10
    )


def test_closed_form_matches_literal_oracle():
    v1, th, xi = 0.9, 2.0, 1.1
    w = literal_wigner_angle(v1, np.tanh(xi), th)
    assert two_point_entropy_closed_form(v1, th, xi) == pytest.approx(
        binary_entropy_oracle((1 + abs(np.cos(w))) / 2), abs=1e-12
    )


def test_delta_pair_layout():
    f = delta_pair_field(0.6, np.pi / 2)
    assert [p.px for p in f.momenta] == pytest.approx([-0.75, 0.75])
    np.testing.assert_allclose(f.weights, [0.5, 0.5])


def test_asymptotic_entropy():
    assert asymptotic_entropy(0.999999999, np.pi / 2) == pytest.approx(1.0, abs=1e-6)
    assert asymptotic_entropy(1e-6, np.pi / 2) < 1e-9
    assert asymptotic_entropy(0.0, np.pi / 2) == 0.0
    levels = [asymptotic_entropy(0.985, np.radians(t)) for t in (20, 45, 70, 90)]
    assert np.all(np.diff(levels) > 0)
    # the finite-boost curve approaches the asymptote
    assert two_point_entropy(0.985, np.pi / 4, 25.0) == pytest.approx(
        asymptotic_entropy(0.985, np.pi / 4), abs=1e-9
    )


def test_over_rotation():
    v1, th = 0.999, np.radians(161.0)
    xi90 = rapidity_for_wigner_angle(v1, th, np.pi / 2)
    xi = np.linspace(0, 20, 401)
    S = np.array([two_point_entropy(v1, th, x) for x in xi])
    k = int(np.argmax(S))
    assert abs(xi[k] - xi90) < 0.05
    assert np.all(np.diff(S[: k + 1]) >= -1e-12)
    assert S[-1] < S[k] - 0.5
    limit = asymptotic_entropy(v1, th)
    assert limit < 1.0
    assert S[-1] == pytest.approx(limit, abs=1e-6)


def test_vanishing_limit_near_antiparallel():
    # needs v1 much closer to 1 than the Wigner angle limit suggests at first sight
    S = two_point_entropy(0.999999999, np.radians(179.9), 30.0)
    assert S < 0.05
