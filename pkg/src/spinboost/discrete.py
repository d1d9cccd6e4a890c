"""Finite spin fields over a handful of momenta.

A boosted product state with momentum support on a few points reduces, after
tracing out momentum, to a convex sum of Wigner-rotated spin projectors. This
module evaluates that sum directly and provides the closed-form two-point
entropy used to check the continuum engine.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .lorentz import FourMomentum, rapidity, wigner_angle_limit, wigner_angle_rapidity
from .spin import SPIN_UP, binary_entropy, von_neumann_entropy, wigner_spinor
from .wavepacket import momentum_from_scenario


@dataclass(frozen=True, eq=False)
class DiscreteSpinField:
    """Spinors attached to momenta, with convex weights."""

    momenta: tuple
    weights: np.ndarray
    spinors: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        s = np.asarray(self.spinors, dtype=complex)
        object.__setattr__(self, "momenta", tuple(self.momenta))
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "spinors", s)
        if not (len(self.momenta) == w.size == s.shape[0]) or s.shape[1:] != (2,):
            raise DomainError("momenta, weights and spinors must have matching lengths")
        if np.any(w < 0):
            raise DomainError("weights must be non-negative")
        if abs(w.sum() - 1.0) > 1e-10:
            raise DomainError(f"weights must sum to 1, got {w.sum()!r}")
        if np.abs(np.einsum("ni,ni->n", s.conj(), s).real - 1.0).max() > 1e-12:
            raise DomainError("spinors must be normalized")

    def __len__(self):
        return len(self.momenta)

    @classmethod
    def uniform(cls, momenta, spinor=SPIN_UP):
        """Equal weights and a common spinor at every momentum."""
        k = len(momenta)
        return cls(momenta, np.full(k, 1.0 / k), np.tile(np.asarray(spinor, complex), (k, 1)))


def merge_fields(fields, mix):
    """Single field equal to the convex combination ``sum_k mix[k] fields[k]``."""
    mix = np.asarray(mix, dtype=float)
    momenta, weights, spinors = [], [], []
    for f, c in zip(fields, mix):
        momenta.extend(f.momenta)
        weights.append(c * f.weights)
        spinors.append(f.spinors)
    return DiscreteSpinField(momenta, np.concatenate(weights), np.concatenate(spinors))


def delta_pair_field(v1, theta, m=1.0):
    """Spin-up particle in an equal superposition of momenta ``(+-p_x0, 0, p_z0)``."""
    p_x0, p_z0 = momentum_from_scenario(v1, theta, m)
    return DiscreteSpinField.uniform(
        [FourMomentum.on_shell(-p_x0, 0.0, p_z0, m), FourMomentum.on_shell(p_x0, 0.0, p_z0, m)]
    )


def four_spin_field(p1, p2=None, m=1.0):
    """Four spin-up spins at ``-p2, -p1, p1, p2`` along x, weight 1/4 each.

    ``p2`` defaults to ``2 * p1``; this spacing is illustrative only.
    """
    if p2 is None:
        p2 = 2.0 * p1
    return DiscreteSpinField.uniform(
        [FourMomentum.on_shell(px, 0.0, 0.0, m) for px in (-p2, -p1, p1, p2)]
    )


def discrete_density(field: DiscreteSpinField, xi):
    """``sum_i w_i U_i |s_i><s_i| U_i^dagger`` with ``U_i`` the Wigner spinor at
    momentum ``p_i`` for a +z boost of rapidity ``xi``."""
    if xi < 0:
        raise DomainError("rapidity must be non-negative")
    if abs(field.weights.sum() - 1.0) > 1e-10:
        raise DomainError("weights must sum to 1")
    rho = np.zeros((2, 2), dtype=complex)
    for p, w, s in zip(field.momenta, field.weights, field.spinors):
        chi = wigner_spinor(xi, p) @ s
        rho += w * np.outer(chi, chi.conj())
    return rho


def two_point_entropy(v1, theta, xi):
    """Spin entropy of the boosted two-momentum state, via the density matrix."""
    if not 0 < theta < np.pi:
        raise DomainError("theta must lie in (0, pi)")
    return von_neumann_entropy(discrete_density(delta_pair_field(v1, theta), xi))


def two_point_entropy_closed_form(v1, theta, xi):
    """``H2((1 + |cos w|)/2)`` with ``w`` the Wigner angle at either lobe.

    The two spins turn by ``+-w`` about the y axis, so their average Bloch
    vector is ``(0, 0, cos w)``.
    """
    w = wigner_angle_rapidity(rapidity(v1), xi, theta)
    return binary_entropy(0.5 * (1.0 + abs(np.cos(w))))


def asymptotic_entropy(v1, theta):
    """Two-point entropy in the limit of an infinitely fast second boost."""
    if v1 == 0:
        return 0.0
    w = wigner_angle_limit(v1, theta)
    return binary_entropy(0.5 * (1.0 + abs(np.cos(w))))
