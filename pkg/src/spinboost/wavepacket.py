"""Momentum-space wavepackets on tensor-product grids.

The state of interest is the x-symmetric Gaussian: a spin-up particle whose
momentum density is a sum of two Gaussian lobes centred at
``(+-p_x0, 0, p_z0)``, normalized with the Lorentz invariant measure
``d^3p / (2 E(p))``. All momenta are in units of the rest mass.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConfigurationError, DomainError
from .lorentz import gamma
from .spin import SPIN_UP

DEFAULT_NODES = 48
EXTENT = 5.0  # half-width of a lobe box, in units of sigma
MIN_NODES = 8


@dataclass(frozen=True)
class GaussianSpec:
    """Width and lobe centre of an x-symmetric Gaussian."""

    sigma: float
    p_x0: float = 0.0
    p_z0: float = 0.0
    m: float = 1.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got {self.m}")
        if self.p_x0 < 0:
            raise DomainError("p_x0 is a magnitude and must be >= 0")

    @classmethod
    def from_scenario(cls, v1, theta, sigma, m=1.0):
        p_x0, p_z0 = momentum_from_scenario(v1, theta, m)
        return cls(sigma=sigma, p_x0=p_x0, p_z0=p_z0, m=m)


def momentum_from_scenario(v1, theta, m=1.0):
    """Lobe centre ``(p_x0, p_z0)`` for packet speed ``v1`` at angle ``theta``
    from the +z boost direction. ``p_z0`` is negative for ``theta > pi/2``."""
    if not 0 < v1 < 1:
        raise DomainError(f"v1 must lie in (0, 1), got {v1}")
    if not 0 <= theta <= np.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta}")
    p = gamma(v1) * m * v1
    return p * np.sin(theta), p * np.cos(theta)


def _offsets(n, spacing):
    # node offsets symmetric about 0 to the last bit: (k - (n-1)/2) * spacing
    return (np.arange(n) - 0.5 * (n - 1)) * spacing


def _trapezoid(n, spacing):
    w = np.full(n, spacing)
    w[0] = w[-1] = 0.5 * spacing
    return w


def _edges(n):
    e = np.zeros(n, dtype=bool)
    e[0] = e[-1] = True
    return e


@dataclass(frozen=True, eq=False)
class MomentumGrid:
    """Tensor-product grid with trapezoid weights and the invariant measure.

    Node arrays are flattened in C order over shape ``(nz, ny, nx)``, so the
    x index runs fastest. ``weights`` already include the ``1/(2E)`` factor.
    """

    px_axis: np.ndarray
    py_axis: np.ndarray
    pz_axis: np.ndarray
    wx: np.ndarray
    wy: np.ndarray
    wz: np.ndarray
    m: float = 1.0
    edge_x: np.ndarray | None = None
    edge_y: np.ndarray | None = None
    edge_z: np.ndarray | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def shape(self):
        return (self.pz_axis.size, self.py_axis.size, self.px_axis.size)

    @property
    def size(self):
        return self.pz_axis.size * self.py_axis.size * self.px_axis.size

    def _mesh(self):
        if "mesh" not in self._cache:
            PZ, PY, PX = np.meshgrid(self.pz_axis, self.py_axis, self.px_axis, indexing="ij")
            px, py, pz = PX.ravel(), PY.ravel(), PZ.ravel()
            E = np.sqrt(self.m**2 + px * px + py * py + pz * pz)
            W = (self.wz[:, None, None] * self.wy[None, :, None] * self.wx[None, None, :]).ravel()
            self._cache["mesh"] = (px, py, pz, E, W / (2.0 * E))
        return self._cache["mesh"]

    @property
    def px(self):
        return self._mesh()[0]

    @property
    def py(self):
        return self._mesh()[1]

    @property
    def pz(self):
        return self._mesh()[2]

    @property
    def energy(self):
        return self._mesh()[3]

    @property
    def weights(self):
        return self._mesh()[4]

    def boundary_mask(self):
        """Nodes on the outermost layer of any block along any axis."""
        ex = self.edge_x if self.edge_x is not None else _edges(self.px_axis.size)
        ey = self.edge_y if self.edge_y is not None else _edges(self.py_axis.size)
        ez = self.edge_z if self.edge_z is not None else _edges(self.pz_axis.size)
        return (ez[:, None, None] | ey[None, :, None] | ex[None, None, :]).ravel()


def build_grid(spec: GaussianSpec, nodes_per_axis=DEFAULT_NODES, extent=EXTENT):
    """Uniform trapezoid grid reaching ``extent`` sigma (default 5) past every
    lobe centre.

    Along x a single span ``[-p_x0 - a, p_x0 + a]`` is used while the lobes
    overlap. Once they are separated (``p_x0 > a``) the axis is made of two
    mirrored blocks of ``nodes_per_axis`` nodes each, one per lobe, so the
    resolution of a lobe does not degrade with its distance from the origin.
    """
    n = int(nodes_per_axis)
    if n < MIN_NODES:
        raise ConfigurationError(f"nodes_per_axis must be >= {MIN_NODES}, got {nodes_per_axis}")
    if extent < EXTENT:
        raise ConfigurationError(f"extent must be at least {EXTENT} sigma")
    half = extent * spec.sigma
    dl = 2.0 * half / (n - 1)

    if spec.p_x0 > half:
        block = spec.p_x0 + _offsets(n, dl)
        px_axis = np.concatenate([-block[::-1], block])
        wx = np.concatenate([_trapezoid(n, dl), _trapezoid(n, dl)])
        edge_x = np.concatenate([_edges(n), _edges(n)])
    else:
        dx = 2.0 * (spec.p_x0 + half) / (n - 1)
        px_axis = _offsets(n, dx)
        wx = _trapezoid(n, dx)
        edge_x = _edges(n)

    py_axis = _offsets(n, dl)
    pz_axis = spec.p_z0 + _offsets(n, dl)
    return MomentumGrid(
        px_axis=px_axis,
        py_axis=py_axis,
        pz_axis=pz_axis,
        wx=wx,
        wy=_trapezoid(n, dl),
        wz=_trapezoid(n, dl),
        m=spec.m,
        edge_x=edge_x,
        edge_y=_edges(n),
        edge_z=_edges(n),
    )


def gaussian_density(spec: GaussianSpec, px, py, pz):
    """Un-normalized two-lobe density, i.e. ``N |psi|^2``."""
    s2 = 2.0 * spec.sigma**2
    env = np.exp(-(py * py + (pz - spec.p_z0) ** 2) / s2)
    lobes = np.exp(-((px - spec.p_x0) ** 2) / s2) + np.exp(-((px + spec.p_x0) ** 2) / s2)
    return env * lobes


def _check_coverage(spec, grid):
    need = EXTENT * spec.sigma * (1 - 1e-9)
    ok = (
        grid.px_axis.max() >= spec.p_x0 + need
        and grid.px_axis.min() <= -spec.p_x0 - need
        and grid.py_axis.max() >= need
        and grid.py_axis.min() <= -need
        and grid.pz_axis.max() >= spec.p_z0 + need
        and grid.pz_axis.min() <= spec.p_z0 - need
    )
    if not ok:
        raise ConfigurationError("grid does not extend 5 sigma beyond both lobe centres")


def normalization_constant(spec: GaussianSpec, grid: MomentumGrid):
    """``N`` making the invariant-measure quadrature of ``|psi|^2`` equal one."""
    return float(np.sum(gaussian_density(spec, grid.px, grid.py, grid.pz) * grid.weights))


@dataclass(frozen=True, eq=False)
class WaveFunction:
    """Spinor-valued amplitudes on a momentum grid.

    ``amplitude`` holds one scalar per node. ``spinor`` is either a single
    normalized spinor shared by every node (a spin-momentum product state) or
    an ``(n, 2)`` array of per-node spinors.
    """

    grid: MomentumGrid
    amplitude: np.ndarray
    spinor: np.ndarray = field(default_factory=lambda: SPIN_UP.copy())

    @property
    def is_product(self):
        return np.ndim(self.spinor) == 1

    def spin_norms(self):
        s = np.asarray(self.spinor)
        if s.ndim == 1:
            return np.vdot(s, s).real
        return np.einsum("ni,ni->n", s.conj(), s).real

    def density(self):
        """Spin-summed ``sum_lambda |psi_lambda(p)|^2`` at each node."""
        return np.abs(self.amplitude) ** 2 * self.spin_norms()


def x_symmetric_gaussian(spec: GaussianSpec, grid: MomentumGrid, normalization=None):
    """Spin-up x-symmetric Gaussian sampled on ``grid``.

    The amplitude is the square root of the two-lobe density, so it is real,
    non-negative and symmetric under ``px -> -px``. By default ``N`` is chosen
    so the quadrature norm on this grid is exactly one; pass ``normalization``
    to reuse a constant obtained elsewhere (e.g. on a finer grid).
    """
    _check_coverage(spec, grid)
    N = normalization_constant(spec, grid) if normalization is None else float(normalization)
    amp = np.sqrt(gaussian_density(spec, grid.px, grid.py, grid.pz) / N)
    return WaveFunction(grid=grid, amplitude=amp, spinor=SPIN_UP.copy())


def norm(wf: WaveFunction):
    """``sum_p sum_lambda |psi_lambda(p)|^2 w(p)``."""
    return float(np.sum(wf.density() * wf.grid.weights))


def boundary_fraction(wf: WaveFunction):
    """Share of the norm carried by the outermost node layers."""
    d = wf.density() * wf.grid.weights
    return float(d[wf.grid.boundary_mask()].sum() / d.sum())
