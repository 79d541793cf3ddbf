"""
Cross-checking against the full spin Hamiltonian
================================================

The mode sums never build the 2^N state space. Here we do, for small rings:
evolve the full state, trace out all spins except two, and compute the Wootters
concurrence. Then we compare with 2|alpha_l1||alpha_l2|.
"""

from magnon_ring.oracle import run_equivalence_suite

cases = run_equivalence_suite(range(2, 8))
worst = max(cases, key=lambda c: c.deviation)
print(f"{len(cases)} cases, worst deviation {worst.deviation:.2e}")
print("worst case:", worst.label)
