"""
Uniform instants on the hypercube, balanced groups on the charter
=================================================================

On the n-cube each coordinate is an independent two-level system, so all
2^n probabilities coincide whenever |cos(t/n)| = |sin(t/n)|, that is at
t = (2k-1) n pi / 4.  The charter graph K_2 x C_3 instead splits its six
probabilities into two groups of three at special times.
"""

import numpy as np

from cayleywalk import mixing, quantum
from cayleywalk.graphs import GraphSpec, build


def hypercube_probs(n, t):
    g = build(GraphSpec.hypercube(n))
    h = quantum.hamiltonian(g, quantum.HamiltonianConvention.PRODUCT_AVERAGED)
    return quantum.measure(quantum.evolve(h, quantum.basis_state(2 ** n), t))


for n in (1, 2, 3, 4):
    t = n * np.pi / 4
    spread = np.ptp(hypercube_probs(n, t))
    # for contrast, t = n / pi is not one of these instants
    other = np.ptp(hypercube_probs(n, n / np.pi))
    print(f"n={n}: spread at n*pi/4 = {spread:.1e}, at n/pi = {other:.3f}")

print()
for sign in (+1, -1):
    t = 16 * np.pi / 3 + sign * 8 * np.pi / 9
    groups, values = mixing.balanced_property_check(3, t)
    print(f"charter(3) at t = 16pi/3 {'+' if sign > 0 else '-'} 8pi/9:")
    for grp, val in zip(groups, values):
        print(f"  vertices {grp} each carry {val:.6f}")
