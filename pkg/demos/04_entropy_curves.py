"""
Spin entropy of boosted Gaussian wavepackets
============================================

Full quadrature over a momentum grid for two-lobe Gaussian packets with
sigma/m = 1. Packets moving with the boost saturate at a lower level;
packets moving against it show a bump at a finite rapidity.
"""

# %%
import numpy as np

from spinboost import BoostScenario, entropy_curve, find_peak, saturation_level

xi = np.linspace(0.0, 12.0, 61)
scenarios = [(0.985, 45.0), (0.985, 90.0), (0.985, 135.0), (0.999, 161.0)]

# %%
curves = {}
for v1, th in scenarios:
    sc = BoostScenario(v1, np.radians(th), sigma_over_m=1.0, xi_values=xi, nodes_per_axis=32)
    curves[th] = c = entropy_curve(sc)
    xs, smax = find_peak(c)
    level = saturation_level(c)
    level = "not saturated" if level is None else f"{level:.4f}"
    print(f"v1={v1} theta={th:5.1f}: peak S={smax:.4f} at xi={xs:.2f}, tail {level}")

# %%
print("\n  xi  " + "".join(f"{th:>9.0f}" for th in curves))
for i in range(0, xi.size, 5):
    print(f"{xi[i]:5.1f} " + "".join(f"{c.entropy[i]:9.4f}" for c in curves.values()))
