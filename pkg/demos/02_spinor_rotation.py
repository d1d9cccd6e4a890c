"""
Spin-1/2 representation of the Wigner rotation
==============================================

For a boost of rapidity ``xi`` along +z, a spin-1/2 particle with momentum
``p`` has its spin turned by an SU(2) matrix that depends on ``p``. We check
that the angle encoded in that matrix agrees with the vector picture, and
show how mixing rotated spins produces entropy.
"""

# %%
import numpy as np

from spinboost import (
    FourMomentum,
    bloch_vector,
    project,
    rotation_angle_of,
    su2_from_axis_angle,
    von_neumann_entropy,
    wigner_angle,
    wigner_spinor,
)
from spinboost.spin import SPIN_UP

# %%
p = FourMomentum.on_shell(3.0, 0.0, -4.0)
xi = 2.0
U = wigner_spinor(xi, p)
axis, omega = rotation_angle_of(U)
theta = np.arccos(p.pz / p.p)
print("U =\n", U.round(6))
print(f"spinor angle {np.degrees(omega):.8f} deg about {axis.round(12)}")
print(f"closed form  {np.degrees(wigner_angle(p.speed, np.tanh(xi), theta)):.8f} deg")

# %%
# Two spins turned by +-omega about y average to a Bloch vector of length
# |cos omega|; at omega = 90 deg the mixture is maximally mixed.
Y = np.array([0.0, 1.0, 0.0])
for deg in (0, 30, 60, 90, 120, 150):
    w = np.radians(deg)
    rho = 0.5 * sum(project(su2_from_axis_angle(Y, s * w) @ SPIN_UP) for s in (1, -1))
    print(f"omega = {deg:3d} deg  bloch = {bloch_vector(rho).round(4)}  S = {von_neumann_entropy(rho):.4f}")
