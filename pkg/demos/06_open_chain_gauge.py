"""
Why an open chain ignores the phase
===================================

Rotating site j by e^{ij theta} removes theta from every bond of an open chain. On a
ring the bond that closes the loop keeps a leftover e^{iN theta}.
"""

import numpy as np

from magnon_ring import Boundary, ChainConfig
from magnon_ring.oracle import hopping_matrix
from magnon_ring.spectrum import gauge_phases

n, theta = 5, 0.5
u = gauge_phases(n, theta)
for boundary in Boundary:
    H = hopping_matrix(ChainConfig(n, theta, boundary))
    H0 = hopping_matrix(ChainConfig(n, 0.0, boundary))
    residual = np.max(np.abs(u[:, None] * H * u.conj()[None, :] - H0))
    print(f"{boundary.value:5s}: largest leftover entry {residual:.3e}")
