"""
Closed-form distributions against the matrix engines
====================================================

Cycles, complete graphs, charters and hypercubes all have explicit
formulas for their walk distributions.  Here a few of them are evaluated
next to the spectral engine.
"""

import numpy as np

from cayleywalk import classical, closedforms as cf, quantum
from cayleywalk.graphs import GraphSpec, build

# Classical walk on C_6, started at vertex 0.
g = build(GraphSpec.cycle(6))
engine = classical.evolve(classical.generator(g), classical.point_mass(6), 1.5)
formula = cf.cycle_distribution(6, 1.5)
print("C_6 at t=1.5")
print("  engine :", np.round(engine, 6))
print("  formula:", np.round(formula, 6))

# On K_n the start vertex keeps (1 + (n-1) e^{-nt/(n-1)})/n and every other
# vertex gets (1 - e^{-nt/(n-1)})/n.
print("\nK_5 over time (start vertex, any other vertex):")
for t in (0.0, 0.5, 1.0, 3.0):
    print(f"  t={t:3}: {cf.complete_classical(5, 0, t):.6f}  {cf.complete_classical(5, 1, t):.6f}")

# The quantum hypercube amplitude depends only on the Hamming weight w:
# cos(t/n)^(n-w) (-i sin(t/n))^w.
n, t = 4, 3.0
g = build(GraphSpec.hypercube(n))
h = quantum.hamiltonian(g, quantum.HamiltonianConvention.PRODUCT_AVERAGED)
psi = quantum.evolve(h, quantum.basis_state(2 ** n), t)
print(f"\nhypercube n={n}, t={t}: amplitude by Hamming weight")
for w in range(n + 1):
    v = (1 << w) - 1  # a vertex whose lowest w bits are set
    print(f"  w={w}: engine {psi[v]:.6f}  formula {cf.hypercube_quantum(n, w, t):.6f}")
