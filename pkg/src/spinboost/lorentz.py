"""Lorentz group numerics: boosts, composition, polar decomposition and the
closed-form Wigner rotation.

Conventions: natural units (c = 1), metric signature (+, -, -, -), time index 0.
Transforms are plain ``(4, 4)`` float arrays acting on column four-vectors
``(E, px, py, pz)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import DegenerateAxisError, DomainError

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

_UNIT_TOL = 1e-12
_SHELL_RTOL = 1e-12


def gamma(speed):
    """Lorentz factor :math:`(1 - v^2)^{-1/2}`.

    Works elementwise on arrays. Raises :class:`DomainError` for speeds outside
    ``[0, 1)``.
    """
    v = np.asarray(speed, dtype=float)
    if np.any(v < 0) or np.any(v >= 1) or not np.all(np.isfinite(v)):
        raise DomainError(f"speed must lie in [0, 1), got {speed!r}")
    # (1 - v)(1 + v) keeps precision as v -> 1
    g = 1.0 / np.sqrt((1.0 - v) * (1.0 + v))
    return float(g) if g.ndim == 0 else g


def rapidity(speed):
    """Rapidity ``arctanh(v)`` of a sub-luminal speed."""
    gamma(speed)  # domain check
    r = np.arctanh(np.asarray(speed, dtype=float))
    return float(r) if r.ndim == 0 else r


def _half_tanh_from_speed(v):
    # tanh(xi/2) = v / (1 + sqrt(1 - v^2)); zero at rest, -> 1 as v -> 1
    v = np.asarray(v, dtype=float)
    return v / (1.0 + np.sqrt((1.0 - v) * (1.0 + v)))


class BoostPair(NamedTuple):
    """Two boost speeds and the angle between their directions (radians)."""

    v1: float
    v2: float
    theta: float


@dataclass(frozen=True)
class FourMomentum:
    """On-shell four-momentum of a massive particle, in units where c = 1."""

    E: float
    px: float
    py: float
    pz: float
    m: float = 1.0

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got {self.m}")
        p2 = self.px**2 + self.py**2 + self.pz**2
        if abs(self.E**2 - p2 - self.m**2) > _SHELL_RTOL * max(self.E**2, self.m**2):
            raise DomainError(
                f"off-shell momentum: E^2 - p^2 = {self.E**2 - p2!r}, m^2 = {self.m**2!r}"
            )
        if self.E < self.m * (1 - _SHELL_RTOL):
            raise DomainError("energy below rest mass")

    @classmethod
    def on_shell(cls, px, py, pz, m=1.0):
        """Build the momentum with ``E = sqrt(m^2 + |p|^2)``."""
        px, py, pz, m = float(px), float(py), float(pz), float(m)
        return cls(float(np.sqrt(m * m + px * px + py * py + pz * pz)), px, py, pz, m)

    @classmethod
    def from_array(cls, arr, m=None):
        arr = np.asarray(arr, dtype=float)
        if m is None:
            m = float(np.sqrt(arr[0] ** 2 - arr[1:] @ arr[1:]))
        return cls(float(arr[0]), float(arr[1]), float(arr[2]), float(arr[3]), float(m))

    @property
    def vector(self):
        """Spatial momentum as a length-3 array."""
        return np.array([self.px, self.py, self.pz])

    @property
    def p(self):
        """Magnitude of the spatial momentum."""
        return float(np.sqrt(self.px**2 + self.py**2 + self.pz**2))

    @property
    def speed(self):
        return self.p / self.E

    def as_array(self):
        return np.array([self.E, self.px, self.py, self.pz])


def _check_unit(direction, name="direction"):
    n = np.asarray(direction, dtype=float)
    if n.shape != (3,):
        raise DomainError(f"{name} must be a 3-vector")
    if abs(np.linalg.norm(n) - 1.0) > _UNIT_TOL:
        raise DomainError(f"{name} must have unit norm, got |n| = {np.linalg.norm(n)!r}")
    return n


def is_lorentz_transform(L, atol=1e-10):
    """True if ``L`` is a proper orthochronous Lorentz transform to ``atol``."""
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4):
        return False
    # relative scale: entries of L^T eta L grow like gamma^2
    scale = max(1.0, float(np.abs(L).max()) ** 2)
    return (
        np.allclose(L.T @ METRIC @ L, METRIC, rtol=0, atol=atol * scale)
        and L[0, 0] >= 1 - atol
        and abs(np.linalg.det(L) - 1.0) <= atol * scale
    )


def boost_matrix(v):
    """Canonical (symmetric) boost taking the rest frame to velocity ``v``.

    Applied to the rest momentum ``(m, 0, 0, 0)`` it yields ``(gamma m, gamma m v)``.
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (3,) or not np.all(np.isfinite(v)):
        raise DomainError("velocity must be a finite 3-vector")
    b2 = float(v @ v)
    if b2 >= 1.0:
        raise DomainError(f"super-luminal velocity |v| = {np.sqrt(b2)!r}")
    L = np.eye(4)
    if b2 == 0.0:
        return L
    g = 1.0 / np.sqrt(1.0 - b2)
    L[0, 0] = g
    L[0, 1:] = L[1:, 0] = g * v
    # (g - 1)/b^2 = g^2/(g + 1) avoids 0/0 for tiny speeds
    L[1:, 1:] += (g * g / (g + 1.0)) * np.outer(v, v)
    return L


def boost_from_rapidity(xi, direction):
    """Boost with rapidity ``xi`` along the unit vector ``direction``."""
    n = _check_unit(direction)
    if xi < 0:
        raise DomainError("rapidity must be non-negative; flip the direction instead")
    ch, sh = np.cosh(xi), np.sinh(xi)
    L = np.eye(4)
    L[0, 0] = ch
    L[0, 1:] = L[1:, 0] = sh * n
    L[1:, 1:] += (ch - 1.0) * np.outer(n, n)
    return L


def rotation_matrix(axis, angle):
    """4x4 active rotation by ``angle`` about the unit ``axis`` (right-hand rule)."""
    n = _check_unit(axis, "axis")
    K = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    R = np.eye(4)
    R[1:, 1:] = np.eye(3) + np.sin(angle) * K + (1.0 - np.cos(angle)) * (K @ K)
    return R


def compose(second, first):
    """Transform equivalent to applying ``first`` and then ``second``."""
    for L in (second, first):
        if not is_lorentz_transform(L):
            raise DomainError("argument is not a proper orthochronous Lorentz transform")
    return np.asarray(second, dtype=float) @ np.asarray(first, dtype=float)


def polar_decompose(L):
    """Split a proper orthochronous transform as ``L = rotation @ boost``.

    The boost velocity seen in the first column of ``L`` fixes the left boost
    ``B(u)``; ``rotation = B(u)^-1 L`` and ``boost = rotation^T L`` is then the
    symmetric factor on the right.
    """
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4) or L[0, 0] < 1 - 1e-10:
        raise DomainError("polar decomposition requires an orthochronous transform")
    u = L[1:, 0] / L[0, 0]
    rotation = boost_matrix(-u) @ L
    boost = rotation.T @ L
    return rotation, boost


def rotation_axis_angle(R):
    """Axis and angle in ``[0, pi]`` of a rotation (3x3 block or 4x4 transform).

    Raises :class:`DegenerateAxisError` when the angle is numerically zero.
    """
    R = np.asarray(R, dtype=float)
    if R.shape == (4, 4):
        R = R[1:, 1:]
    a = 0.5 * np.array([R[2, 1] - R[1, 2], R[0, 2] - R[2, 0], R[1, 0] - R[0, 1]])
    s = np.linalg.norm(a)
    c = 0.5 * (np.trace(R) - 1.0)
    angle = float(np.arctan2(s, c))
    if angle < 1e-12:
        raise DegenerateAxisError("identity rotation has no axis")
    if s > 1e-6 or c > 0:
        return a / s, angle
    # near pi the antisymmetric part vanishes; read the axis from R + I
    S = 0.5 * (R + np.eye(3))
    k = int(np.argmax(np.diag(S)))
    axis = S[:, k] / np.sqrt(S[k, k])
    if s > 0 and axis @ a < 0:
        axis = -axis
    return axis / np.linalg.norm(axis), angle


def _wigner_from_half_tanh(t1, t2, theta):
    # tan(w/2) = sin(theta) / (cos(theta) + D),  D = 1 / (t1 t2)
    t12 = t1 * t2
    w = 2.0 * np.arctan2(np.sin(theta) * t12, np.cos(theta) * t12 + 1.0)
    return float(w) if np.ndim(w) == 0 else w


def _check_theta(theta):
    th = np.asarray(theta, dtype=float)
    if np.any(th < 0) or np.any(th > np.pi):
        raise DomainError(f"boost angle must lie in [0, pi], got {theta!r}")
    return th


def wigner_angle(v1, v2, theta):
    """Magnitude of the Wigner rotation produced by two boosts.

    ``v1``, ``v2`` are the boost speeds and ``theta`` the angle between their
    directions. Uses ``tan(w/2) = sin(theta) / (cos(theta) + D)`` with
    ``D = sqrt((g1 + 1)/(g1 - 1) * (g2 + 1)/(g2 - 1))``, rewritten as
    ``D = 1 / (tanh(xi1/2) tanh(xi2/2))`` so that a zero speed gives exactly
    zero rotation instead of an infinite ``D``. Broadcasts over arrays.

    Returns the unsigned angle in ``[0, pi)``; the sense of rotation is carried
    by :func:`wigner_axis`.
    """
    gamma(v1), gamma(v2)
    th = _check_theta(theta)
    return _wigner_from_half_tanh(_half_tanh_from_speed(v1), _half_tanh_from_speed(v2), th)


def wigner_angle_rapidity(xi1, xi2, theta):
    """Same as :func:`wigner_angle` with both boosts given as rapidities.

    Preferred for very large boosts, where ``tanh(xi)`` rounds to 1.
    """
    if np.any(np.asarray(xi1) < 0) or np.any(np.asarray(xi2) < 0):
        raise DomainError("rapidities must be non-negative")
    th = _check_theta(theta)
    return _wigner_from_half_tanh(np.tanh(np.asarray(xi1) / 2), np.tanh(np.asarray(xi2) / 2), th)


def wigner_angle_limit(v1, theta):
    """Wigner angle in the limit where the second boost approaches light speed."""
    gamma(v1)
    return _wigner_from_half_tanh(_half_tanh_from_speed(v1), 1.0, _check_theta(theta))


def rapidity_for_wigner_angle(v1, theta, omega):
    """Rapidity of the second boost at which the Wigner angle equals ``omega``.

    Inverts the closed form: ``coth(xi2/2) = D tanh(xi1/2)`` with
    ``D = sin(theta)/tan(omega/2) - cos(theta)``. Raises :class:`DomainError`
    when ``omega`` is not reached by any finite boost.
    """
    if not (0 < v1 < 1) or not (0 < theta < np.pi) or not (0 < omega < np.pi):
        raise DomainError("need 0 < v1 < 1 and theta, omega in (0, pi)")
    t1 = float(_half_tanh_from_speed(v1))
    D = np.sin(theta) / np.tan(omega / 2) - np.cos(theta)
    c = D * t1
    if not c > 1.0:
        raise DomainError(
            f"angle {omega!r} exceeds the limiting Wigner angle "
            f"{wigner_angle_limit(v1, theta)!r} for this geometry"
        )
    return float(np.log((c + 1.0) / (c - 1.0)))


def wigner_axis(v1_dir, v2_dir):
    """Unit axis ``v2_dir x v1_dir`` orthogonal to the plane of the two boosts.

    The active rotation ``B(u)^-1 L(v2) L(v1)`` turns vectors by the Wigner
    angle about the *opposite* axis ``v1_dir x v2_dir``.
    """
    a = _check_unit(v1_dir, "v1_dir")
    b = _check_unit(v2_dir, "v2_dir")
    n = np.cross(b, a)
    norm = np.linalg.norm(n)
    if norm < 1e-12:
        raise DegenerateAxisError("collinear boosts: Wigner rotation vanishes")
    return n / norm


def apply(L, p):
    """Transform a :class:`FourMomentum`; the mass is carried over."""
    q = np.asarray(L, dtype=float) @ p.as_array()
    E = float(q[0])
    # restore the shell exactly against round-off in large boosts
    pvec = q[1:]
    E_shell = float(np.sqrt(p.m**2 + pvec @ pvec))
    if abs(E - E_shell) > 1e-10 * E_shell:
        raise DomainError("transform did not preserve the mass shell")
    return FourMomentum(E_shell, float(q[1]), float(q[2]), float(q[3]), p.m)
