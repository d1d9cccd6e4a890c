"""Reduced spin state of a boosted wavepacket and entropy-vs-rapidity curves.

The boost is always along +z with rapidity ``xi``; the geometry of a scenario
is encoded in the rest-frame lobe centre instead. The partial trace over
momentum is evaluated in the rest-frame variable: with the invariant measure
the change of variables ``p -> Lambda^-1 p`` has unit Jacobian, so each grid
node simply carries its own Wigner-rotated spinor and no resampling onto a
boosted grid is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .exceptions import ConfigurationError, DomainError
from .spin import boosted_spinors, von_neumann_entropy
from .wavepacket import (
    DEFAULT_NODES,
    GaussianSpec,
    WaveFunction,
    build_grid,
    norm,
    x_symmetric_gaussian,
)

DEFAULT_XI = tuple(np.linspace(0.0, 12.0, 60))
_NORM_TOL = 1e-4


@dataclass(frozen=True)
class BoostScenario:
    """Packet speed ``v1`` at angle ``theta`` (radians) to the boost, a width
    ``sigma_over_m`` and the rapidities to sweep."""

    v1: float
    theta: float
    sigma_over_m: float = 1.0
    xi_values: tuple = DEFAULT_XI
    nodes_per_axis: int = DEFAULT_NODES

    def __post_init__(self):
        xi = tuple(float(x) for x in np.atleast_1d(self.xi_values))
        object.__setattr__(self, "xi_values", xi)
        if not 0 < self.v1 < 1:
            raise DomainError(f"v1 must lie in (0, 1), got {self.v1}")
        if not 0 < self.theta < np.pi:
            raise DomainError(f"theta must lie in (0, pi), got {self.theta}")
        if not self.sigma_over_m > 0:
            raise DomainError("sigma_over_m must be positive")
        if not xi or xi[0] < 0 or np.any(np.diff(xi) <= 0):
            raise ConfigurationError("xi_values must be strictly increasing and start at >= 0")

    def gaussian(self):
        return GaussianSpec.from_scenario(self.v1, self.theta, self.sigma_over_m)


class EntropyPoint(NamedTuple):
    xi: float
    v2: float
    entropy: float


@dataclass(frozen=True, eq=False)
class EntropyCurve:
    points: list
    scenario: BoostScenario | None = None
    densities: list = field(default_factory=list, repr=False)

    @property
    def xi(self):
        return np.array([p.xi for p in self.points])

    @property
    def entropy(self):
        return np.array([p.entropy for p in self.points])

    def __len__(self):
        return len(self.points)


def boosted_spin_density(wf: WaveFunction, xi):
    """Reduced spin state seen after a +z boost of rapidity ``xi``.

    ``rho = sum_q w(q) |psi(q)|^2 U(q) |chi(q)><chi(q)| U(q)^dagger`` over the
    rest-frame nodes ``q``. Sums run in the grid's fixed C order with numpy's
    pairwise reduction, so the result does not depend on BLAS threading.
    """
    if xi < 0:
        raise DomainError("rapidity must be non-negative")
    nrm = norm(wf)
    if abs(nrm - 1.0) > _NORM_TOL:
        raise DomainError(f"wavefunction not normalized (norm = {nrm!r})")
    g = wf.grid
    spinor = np.asarray(wf.spinor, dtype=complex)
    if spinor.ndim == 2:
        # carry the per-node spinor norms in the weight
        norms = np.sqrt(wf.spin_norms())
        spinor = spinor / np.where(norms > 0, norms, 1.0)[:, None]
    c = g.weights * wf.density()
    phi = boosted_spinors(xi, g.px, g.py, g.pz, spinor, g.m)
    r00 = np.sum(c * (phi[:, 0].real ** 2 + phi[:, 0].imag ** 2))
    r11 = np.sum(c * (phi[:, 1].real ** 2 + phi[:, 1].imag ** 2))
    r10 = np.sum(c * phi[:, 1] * phi[:, 0].conj())
    return np.array([[r00, np.conj(r10)], [r10, r11]], dtype=complex)


def entropy_curve(scenario: BoostScenario, wavefunction: WaveFunction | None = None):
    """Spin entropy at every rapidity of ``scenario``.

    The rest-frame state is built once; pass ``wavefunction`` to reuse one.
    """
    if wavefunction is None:
        spec = scenario.gaussian()
        wavefunction = x_symmetric_gaussian(spec, build_grid(spec, scenario.nodes_per_axis))
    points, densities = [], []
    for xi in scenario.xi_values:
        rho = boosted_spin_density(wavefunction, xi)
        densities.append(rho)
        points.append(EntropyPoint(xi, float(np.tanh(xi)), von_neumann_entropy(rho)))
    return EntropyCurve(points, scenario, densities)


def saturation_level(curve: EntropyCurve, tail_fraction=0.25, tol=1e-3):
    """Mean entropy over the trailing ``tail_fraction`` of the curve, or
    ``None`` when that tail still varies by more than ``tol``."""
    if len(curve) < 8:
        raise ConfigurationError("saturation analysis needs at least 8 points")
    if not 0 < tail_fraction < 1:
        raise ConfigurationError("tail_fraction must lie in (0, 1)")
    k = max(2, int(round(tail_fraction * len(curve))))
    tail = curve.entropy[-k:]
    if tail.max() - tail.min() > tol:
        return None
    return float(tail.mean())


def find_peak(curve: EntropyCurve):
    """``(xi, entropy)`` at the maximum; ties go to the smallest rapidity."""
    if len(curve) == 0:
        raise ConfigurationError("empty curve")
    i = int(np.argmax(curve.entropy))
    return curve.points[i].xi, curve.points[i].entropy
