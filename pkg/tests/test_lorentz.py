import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from conftest import literal_wigner_angle
from spinboost.exceptions import DegenerateAxisError, DomainError
from spinboost.lorentz import (
    METRIC,
    FourMomentum,
    apply,
    boost_from_rapidity,
    boost_matrix,
    compose,
    gamma,
    is_lorentz_transform,
    polar_decompose,
    rapidity_for_wigner_angle,
    rotation_axis_angle,
    rotation_matrix,
    wigner_angle,
    wigner_angle_limit,
    wigner_angle_rapidity,
    wigner_axis,
)

X, Y, Z = np.eye(3)
speeds = st.floats(0.01, 0.995)
angles = st.floats(0.0, np.pi)


def in_plane(v, theta):
    return v * np.array([np.sin(theta), 0.0, np.cos(theta)])


# values from 30-digit mpmath evaluation of (1 - v^2)^(-1/2)
@pytest.mark.parametrize(
    "v, expected",
    [(0.0, 1.0), (0.985, 5.79527587799744667), (0.999, 22.3662720421292217)],
)
def test_gamma(v, expected):
    assert gamma(v) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("v", [1.0, 1.5, -0.1])
def test_gamma_rejects_superluminal(v):
    with pytest.raises(DomainError):
        gamma(v)


def test_boost_matrix_examples():
    np.testing.assert_array_equal(boost_matrix([0, 0, 0]), np.eye(4))
    p = boost_matrix([0, 0, 0.6]) @ np.array([1.0, 0, 0, 0])
    np.testing.assert_allclose(p, [1.25, 0, 0, 0.75], atol=1e-15)
    v = np.array([0.3, -0.5, 0.6])
    np.testing.assert_allclose(boost_matrix(v) @ boost_matrix(-v), np.eye(4), atol=1e-10)
    with pytest.raises(DomainError):
        boost_matrix([0.8, 0.7, 0.0])


def test_boost_matrix_is_symmetric_lorentz():
    L = boost_matrix([0.2, 0.4, -0.7])
    np.testing.assert_allclose(L, L.T)
    assert is_lorentz_transform(L)


def test_boost_from_rapidity():
    np.testing.assert_array_equal(boost_from_rapidity(0.0, Z), np.eye(4))
    np.testing.assert_allclose(
        boost_from_rapidity(np.arctanh(0.6), Z), boost_matrix([0, 0, 0.6]), atol=1e-12
    )
    E = (boost_from_rapidity(2.4, Z) @ [1.0, 0, 0, 0])[0]
    assert E == pytest.approx(5.55694716696550659, rel=1e-14)
    with pytest.raises(DomainError):
        boost_from_rapidity(1.0, [0, 0, 1.1])


def test_compose_examples():
    L = boost_matrix([0.1, 0.2, 0.3])
    np.testing.assert_array_equal(compose(np.eye(4), L), L)
    a, b = 0.7, 1.9
    np.testing.assert_allclose(
        compose(boost_from_rapidity(b, Z), boost_from_rapidity(a, Z)),
        boost_from_rapidity(a + b, Z),
        atol=1e-12,
    )
    M = compose(boost_matrix(0.985 * X), boost_matrix(0.985 * Z))
    assert np.abs(M - M.T).max() > 1.0


def test_compose_rejects_non_lorentz():
    with pytest.raises(DomainError):
        compose(np.eye(4), 2 * np.eye(4))


def test_polar_decompose_trivial_cases():
    B = boost_matrix([0.3, 0.1, -0.5])
    R, B2 = polar_decompose(B)
    np.testing.assert_allclose(R, np.eye(4), atol=1e-12)
    np.testing.assert_allclose(B2, B, atol=1e-12)

    Rot = rotation_matrix(np.array([1.0, 2.0, 2.0]) / 3.0, 0.8)
    R, B2 = polar_decompose(Rot)
    np.testing.assert_allclose(R, Rot, atol=1e-12)
    np.testing.assert_allclose(B2, np.eye(4), atol=1e-12)


def test_polar_decompose_rejects_time_reversal():
    with pytest.raises(DomainError):
        polar_decompose(np.diag([-1.0, 1, 1, 1]))


def test_polar_decompose_orthogonal_boosts_match_closed_form():
    L = compose(boost_matrix(0.985 * X), boost_matrix(0.985 * Z))
    R, B = polar_decompose(L)
    axis, angle = rotation_axis_angle(R)
    assert angle == pytest.approx(wigner_angle(0.985, 0.985, np.pi / 2), abs=1e-8)
    # boosts along z then x: rotation about +-y
    assert abs(abs(axis[1]) - 1.0) < 1e-10


@settings(max_examples=60, deadline=None)
@given(v1=speeds, v2=speeds, theta=angles)
def test_polar_structure(v1, v2, theta):
    L = compose(boost_matrix(v2 * Z), boost_matrix(in_plane(v1, theta)))
    R, B = polar_decompose(L)
    np.testing.assert_allclose(R @ B, L, atol=1e-10 * np.abs(L).max())
    np.testing.assert_allclose(B, B.T, atol=1e-10 * np.abs(L).max())
    np.testing.assert_allclose(R[0, 1:], 0.0, atol=1e-10)
    np.testing.assert_allclose(R[1:, 0], 0.0, atol=1e-10)
    np.testing.assert_allclose(R[1:, 1:].T @ R[1:, 1:], np.eye(3), atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(v1=speeds, v2=speeds, theta=st.floats(0.01, np.pi - 0.01))
def test_composition_matches_closed_form(v1, v2, theta):
    R, _ = polar_decompose(compose(boost_matrix(v2 * Z), boost_matrix(in_plane(v1, theta))))
    axis, angle = rotation_axis_angle(R)
    assert angle == pytest.approx(literal_wigner_angle(v1, v2, theta), abs=1e-8)
    assert angle == pytest.approx(wigner_angle(v1, v2, theta), abs=1e-8)
    # active rotation is about v1 x v2, i.e. opposite to wigner_axis
    n = wigner_axis(in_plane(1.0, theta), Z)
    np.testing.assert_allclose(axis, -n, atol=1e-8)


@settings(max_examples=50, deadline=None)
@given(v=st.lists(st.floats(-0.57, 0.57), min_size=3, max_size=3))
def test_metric_preserved(v):
    L = boost_matrix(v)
    np.testing.assert_allclose(L.T @ METRIC @ L, METRIC, atol=1e-10)
    assert np.linalg.det(L) == pytest.approx(1.0, abs=1e-10)


def test_wigner_angle_examples():
    assert wigner_angle(0.3, 0.9, 0.0) == 0.0
    w = wigner_angle(0.985, 0.985, np.pi / 2)
    # 30-digit evaluation: D = 1.417077..., w = 70.41954583710089 deg
    assert np.degrees(w) == pytest.approx(70.41954583710089, abs=1e-10)
    assert np.degrees(wigner_angle_limit(0.999999999, np.pi / 2)) == pytest.approx(90.0, abs=1e-2)
    assert np.degrees(wigner_angle_rapidity(30.0, 30.0, np.pi - 1e-4)) > 179.9


def test_wigner_angle_zero_speed_and_domain():
    assert wigner_angle(0.0, 0.9, 1.0) == 0.0
    assert wigner_angle(0.9, 0.0, 1.0) == 0.0
    with pytest.raises(DomainError):
        wigner_angle(1.0, 0.5, 1.0)
    with pytest.raises(DomainError):
        wigner_angle(0.5, 0.5, 4.0)


def test_wigner_angle_bounded_and_monotone():
    v2 = np.array([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99])
    for theta in np.linspace(0.1, np.pi - 0.1, 9):
        for v1 in (0.2, 0.7, 0.99):
            w = wigner_angle(v1, v2, theta)
            assert np.all(np.diff(w) > 0)
            assert np.all((w >= 0) & (w < np.pi))


def test_wigner_angle_small_boost_limit():
    assert wigner_angle(1e-2, 1e-2, np.pi / 2) < 1e-3


def test_wigner_axis():
    np.testing.assert_allclose(wigner_axis(X, Z), Y)
    np.testing.assert_allclose(wigner_axis(-X, Z), -Y)
    with pytest.raises(DegenerateAxisError):
        wigner_axis(Z, Z)


def test_rapidity_for_wigner_angle_matches_root_finder():
    v1, theta = 0.999, np.radians(161.0)
    xi = rapidity_for_wigner_angle(v1, theta, np.pi / 2)
    oracle = brentq(lambda x: literal_wigner_angle(v1, np.tanh(x), theta) - np.pi / 2, 0.1, 8.0)
    assert xi == pytest.approx(oracle, abs=1e-9)
    with pytest.raises(DomainError):
        rapidity_for_wigner_angle(0.5, np.pi / 2, np.radians(60.0))


def test_apply():
    p = FourMomentum.on_shell(0.3, -0.2, 1.1)
    q = apply(np.eye(4), p)
    assert q == p
    xi = 1.3
    q = apply(boost_from_rapidity(xi, Z), FourMomentum.on_shell(0.0, 0.0, 0.7))
    E = np.sqrt(1 + 0.49)
    assert q.E == pytest.approx(E * np.cosh(xi) + 0.7 * np.sinh(xi), rel=1e-14)


def test_apply_preserves_mass(rng):
    for _ in range(20):
        L = compose(
            rotation_matrix(Y, rng.uniform(0, np.pi)), boost_matrix(rng.uniform(-0.5, 0.5, 3))
        )
        p = FourMomentum.on_shell(*rng.normal(size=3), m=2.0)
        q = apply(L, p)
        assert q.E**2 - q.vector @ q.vector == pytest.approx(4.0, rel=1e-10)


def test_four_momentum_shell_check():
    with pytest.raises(DomainError):
        FourMomentum(2.0, 1.0, 0.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        FourMomentum(0.0, 0.0, 0.0, 0.0, 0.0)
