"""
Long rings and Bessel functions
===============================

On a long ring the magnon cannot tell that the ring is closed until its wavefront
wraps around. Until then the isolated-spin concurrence with site l is |J_{l-1}(t)|,
and the phase theta has no effect.
"""

import numpy as np

from magnon_ring import ChainConfig, IsolatedSpin, concurrence_series
from magnon_ring.dynamics import asymptotic_concurrence_isolated
from magnon_ring.sweep import asymptotic_theta_dependence, large_n_theta_dependence

times = np.linspace(0, 30, 7)
ring = concurrence_series(ChainConfig(2048), IsolatedSpin(1), 0, 4, times)
bessel = [asymptotic_concurrence_isolated(4, t) for t in times]
for t, a, b in zip(times, ring, bessel):
    print(f"t={t:5.1f}  ring {a:.6f}  |J_3| {b:.6f}")

# how much theta can still change C at t = 200, for growing rings
sizes = [16, 64, 256, 1024]
for n, d in zip(sizes, large_n_theta_dependence(3, 200.0, sizes)):
    print(f"N={n:5d}  max_theta |C(theta) - C(0)| = {d:.2e}")

# an in-chain Bell pair keeps a theta dependence even on an infinite ring
print("in-chain pair, infinite ring:", f"{asymptotic_theta_dependence(3, 20.0):.4f}")
