"""Spin-1/2 machinery: the momentum-dependent Wigner spinor for a boost along
+z, SU(2) axis-angle maps, Bloch vectors and the qubit von Neumann entropy.

Basis order is (lambda = +1/2, lambda = -1/2); spinors are length-2 complex
arrays and density matrices ``(2, 2)`` complex arrays.
"""

from __future__ import annotations

import numpy as np

from .exceptions import DomainError
from .lorentz import FourMomentum, rotation_matrix

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])

SPIN_UP = np.array([1.0, 0.0], dtype=complex)
SPIN_DOWN = np.array([0.0, 1.0], dtype=complex)

_NEG_EIG_TOL = 1e-9


def wigner_spinor_components(xi, px, py, pz, m=1.0):
    """Real coefficients ``(alpha, beta)`` of the Wigner spinor, elementwise.

    For a boost of rapidity ``xi`` along +z acting on momentum ``p``::

        alpha = sqrt((E + m)/(E' + m)) (cosh(xi/2) + pz/(E + m) sinh(xi/2))
        beta  = sinh(xi/2) / sqrt((E + m)(E' + m))
        E'    = E cosh(xi) + pz sinh(xi)

    Evaluated through ``E + pz = (m^2 + p_perp^2)/(E - pz)`` so that momenta
    nearly anti-parallel to the boost keep full precision.
    """
    px, py, pz = (np.asarray(a, dtype=float) for a in (px, py, pz))
    xi = float(xi)
    pperp2 = px * px + py * py
    E = np.sqrt(m * m + pperp2 + pz * pz)
    e_plus = np.where(pz >= 0, E + pz, (m * m + pperp2) / (E - pz))
    e_minus = np.where(pz >= 0, (m * m + pperp2) / (E + pz), E - pz)
    ep, em = np.exp(xi), np.exp(-xi)
    E_boost = 0.5 * (e_plus * ep + e_minus * em)
    hp, hm = np.exp(0.5 * xi), np.exp(-0.5 * xi)
    denom = np.sqrt((E + m) * (E_boost + m))
    alpha = 0.5 * ((m + e_plus) * hp + (m + e_minus) * hm) / denom
    beta = 0.5 * (hp - hm) / denom
    return alpha, beta


def wigner_spinor(xi, p: FourMomentum):
    """SU(2) matrix of the Wigner rotation for a +z boost of rapidity ``xi``.

    Returns ``[[alpha, beta (px - i py)], [-beta (px + i py), alpha]]``.
    """
    if xi < 0:
        raise DomainError("rapidity must be non-negative")
    if not isinstance(p, FourMomentum):
        raise DomainError("expected a FourMomentum")
    # FourMomentum validates the shell on construction; recheck for safety
    FourMomentum(p.E, p.px, p.py, p.pz, p.m)
    a, b = wigner_spinor_components(xi, p.px, p.py, p.pz, p.m)
    a, b = float(a), float(b)
    return np.array(
        [[a, b * complex(p.px, -p.py)], [-b * complex(p.px, p.py), a]], dtype=complex
    )


def boosted_spinors(xi, px, py, pz, chi, m=1.0):
    """Apply the Wigner spinor at each momentum node to the spinor(s) ``chi``.

    ``chi`` is one spinor ``(2,)`` shared by all nodes or one per node ``(n, 2)``.
    Returns an ``(n, 2)`` complex array.
    """
    alpha, beta = wigner_spinor_components(xi, px, py, pz, m)
    alpha, beta = np.ravel(alpha), np.ravel(beta)
    p_minus = np.ravel(np.asarray(px) - 1j * np.asarray(py))
    chi = np.asarray(chi, dtype=complex)
    c0, c1 = (chi[0], chi[1]) if chi.ndim == 1 else (chi[:, 0], chi[:, 1])
    out = np.empty((alpha.size, 2), dtype=complex)
    out[:, 0] = alpha * c0 + beta * p_minus * c1
    out[:, 1] = -beta * np.conj(p_minus) * c0 + alpha * c1
    return out


def su2_from_axis_angle(axis, omega):
    """``cos(omega/2) I - i sin(omega/2) (axis . sigma)``."""
    n = np.asarray(axis, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise DomainError("axis must be a unit 3-vector")
    return np.cos(omega / 2) * np.eye(2) - 1j * np.sin(omega / 2) * np.tensordot(n, PAULI, 1)


def rotation_angle_of(U):
    """Axis and angle ``omega`` in ``[0, pi]`` of an SU(2) element, up to sign.

    ``U`` and ``-U`` give the same answer. Within 1e-9 of the identity the
    axis is undefined and ``(None, 0.0)`` is returned.
    """
    U = np.asarray(U, dtype=complex)
    c = 0.5 * np.trace(U).real
    if c < 0:
        U, c = -U, -c
    if np.abs(U - np.eye(2)).max() < 1e-9:
        return None, 0.0
    A = 0.5 * (U - U.conj().T)
    # A = -i sin(omega/2) (n . sigma)  =>  sin(omega/2) n_k = (i/2) tr(A sigma_k)
    sn = np.array([0.5j * np.trace(A @ s) for s in PAULI]).real
    s = np.linalg.norm(sn)
    return sn / s, float(2.0 * np.arctan2(s, c))


def project(chi):
    """Projector ``|chi><chi|`` onto a normalized spinor."""
    chi = np.asarray(chi, dtype=complex)
    nrm = np.vdot(chi, chi).real
    if nrm == 0:
        raise DomainError("zero spinor has no projector")
    if abs(nrm - 1.0) > 1e-12:
        raise DomainError(f"spinor not normalized (norm^2 = {nrm!r})")
    return np.outer(chi, chi.conj())


def bloch_vector(rho):
    """``(tr(rho sx), tr(rho sy), tr(rho sz))``."""
    rho = np.asarray(rho, dtype=complex)
    return np.array(
        [
            2.0 * rho[1, 0].real,
            2.0 * rho[1, 0].imag,
            (rho[0, 0] - rho[1, 1]).real,
        ]
    )


def density_from_bloch(n):
    n = np.asarray(n, dtype=float)
    return 0.5 * (np.eye(2) + np.tensordot(n, PAULI, 1))


def rotate_bloch(n, axis, omega):
    """Active SO(3) rotation of a Bloch vector."""
    return rotation_matrix(axis, omega)[1:, 1:] @ np.asarray(n, dtype=float)


def density_eigenvalues(rho):
    """Eigenvalues of a 2x2 Hermitian matrix, ascending, in closed form."""
    rho = np.asarray(rho, dtype=complex)
    a, d = rho[0, 0].real, rho[1, 1].real
    t = a + d
    r = np.hypot(a - d, 2.0 * abs(rho[0, 1]))
    big = 0.5 * (t + r)
    det = a * d - abs(rho[0, 1]) ** 2
    # small root from det/big avoids cancellation for nearly pure states
    small = det / big if big > 0 else 0.5 * (t - r)
    return np.array([small, big])


def is_density_matrix(rho, herm_tol=1e-12, trace_tol=1e-10, eig_tol=1e-12):
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        return False
    return (
        np.abs(rho - rho.conj().T).max() <= herm_tol
        and abs(np.trace(rho) - 1.0) <= trace_tol
        and density_eigenvalues(rho)[0] >= -eig_tol
    )


def binary_entropy(x):
    """``-x log2 x - (1 - x) log2 (1 - x)`` with ``0 log 0 = 0``."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for q in (x, 1.0 - x):
        mask = q > 0
        out[mask] -= q[mask] * np.log2(q[mask])
    return float(out) if out.ndim == 0 else out


def von_neumann_entropy(rho):
    """Entropy ``-tr(rho log2 rho)`` of a qubit state, in bits."""
    lam = density_eigenvalues(rho)
    if lam[0] < -_NEG_EIG_TOL:
        raise DomainError(f"density matrix has negative eigenvalue {lam[0]!r}")
    lam = np.clip(lam, 0.0, None)
    lam = lam[lam > 0]
    return float(max(0.0, -(lam * np.log2(lam)).sum()))
