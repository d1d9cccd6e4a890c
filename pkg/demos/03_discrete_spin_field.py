"""
Discrete spin fields and the over-rotation bump
===============================================

A particle in a superposition of two momenta ``(+-p_x0, 0, p_z0)`` is the
simplest spin field. After a z boost each spin turns by the Wigner angle in
opposite senses; the spin entropy is maximal when they become orthogonal and
drops again once they over-rotate.
"""

# %%
import numpy as np

from spinboost import (
    asymptotic_entropy,
    bloch_vector,
    discrete_density,
    four_spin_field,
    rapidity_for_wigner_angle,
    two_point_entropy,
    two_point_entropy_closed_form,
)

# %%
v1, theta = 0.999, np.radians(161.0)
xi90 = rapidity_for_wigner_angle(v1, theta, np.pi / 2)
print(f"Wigner angle reaches 90 deg at xi = {xi90:.4f}")
print(" xi     S(matrix)   S(closed form)")
for xi in (0.0, 1.0, 2.0, xi90, 3.0, 5.0, 8.0, 14.0):
    print(f"{xi:5.2f}   {two_point_entropy(v1, theta, xi):.6f}    {two_point_entropy_closed_form(v1, theta, xi):.6f}")
print(f"limit  {asymptotic_entropy(v1, theta):.6f}")

# %%
# Saturation level rises with the boost angle up to 90 deg.
for deg in (15, 45, 70, 90):
    print(f"theta = {deg:2d} deg -> saturation {asymptotic_entropy(0.985, np.radians(deg)):.4f}")

# %%
# Four spins at -2p, -p, p, 2p along x: pairs cancel their x components.
field = four_spin_field(1.0)
for xi in (0.0, 1.0, 3.0):
    print(f"xi = {xi}: bloch = {bloch_vector(discrete_density(field, xi)).round(6)}")
