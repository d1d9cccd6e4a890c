"""
Wigner rotation from two non-collinear boosts
=============================================

Two boosts applied one after the other are not a single boost: the product
splits into a boost and a residual spatial rotation. Here we build that
product explicitly, split it, and compare the rotation angle with the
half-tangent closed form.
"""

# %%
import numpy as np

from spinboost import (
    boost_matrix,
    compose,
    polar_decompose,
    rotation_axis_angle,
    wigner_angle,
    wigner_angle_limit,
    wigner_axis,
)

# %%
# First boost at angle theta from z, second boost along +z.
v1, v2, theta = 0.985, 0.985, np.pi / 2
first = boost_matrix(v1 * np.array([np.sin(theta), 0.0, np.cos(theta)]))
second = boost_matrix(v2 * np.array([0.0, 0.0, 1.0]))
rotation, boost = polar_decompose(compose(second, first))
axis, omega = rotation_axis_angle(rotation)

print(f"rotation from the group product : {np.degrees(omega):.10f} deg about {axis.round(12)}")
print(f"closed form                      : {np.degrees(wigner_angle(v1, v2, theta)):.10f} deg")
print(f"v2 x v1 axis                     : {wigner_axis([1.0, 0, 0], [0, 0, 1.0])}")

# %%
# Angle against boost angle for equal speeds. The maximum sits where
# cos(theta) = -1/D and drifts toward 180 deg as the speeds grow.
theta = np.linspace(0, np.pi, 181)
print("\n v     argmax theta   max omega")
for v in (0.5, 0.9, 0.985, 0.99999, 0.9999999):
    w = np.degrees(wigner_angle(v, v, theta))
    print(f"{v:<9} {np.degrees(theta[np.argmax(w)]):8.1f} deg  {w.max():8.3f} deg")

# %%
# With the second boost pushed to light speed the angle saturates; the limit
# depends on the first speed and on theta.
for th in (45, 90, 135, 161):
    print(f"theta = {th:3d} deg: limiting angle {np.degrees(wigner_angle_limit(0.985, np.radians(th))):7.3f} deg")
