"""
Classical walks forget where they started
=========================================

On a connected regular graph the continuous-time classical walk tends to
the uniform distribution.  Total variation here is the plain L1 sum, so a
point mass on n vertices starts at 2(n-1)/n.
"""

import numpy as np

from cayleywalk import classical, mixing
from cayleywalk.graphs import GraphSpec, build

specs = {
    "C_8": GraphSpec.cycle(8),
    "K_5": GraphSpec.complete(5),
    "charter(5)": GraphSpec.charter(5),
    "hypercube(4)": GraphSpec.hypercube(4),
}
times = np.array([0.0, 1.0, 5.0, 20.0, 200.0])

print("TV to uniform   " + "".join(f"t={t:<9g}" for t in times))
for name, spec in specs.items():
    g = build(spec)
    h = classical.generator(g, classical.GeneratorConvention.PRODUCT_NORMALIZED)
    traj = classical.trajectory(h, classical.point_mass(g.vertex_count), times)
    print(f"{name:<16}" + "".join(f"{tv:<11.2e}" for tv in mixing.tv_to_uniform(traj)))

# The discrete-time lazy walk gets there too, one step at a time.
g = build(GraphSpec.complete(5))
w = classical.lazy_walk_matrix(g)
p = classical.point_mass(5)
for step in range(50):
    p = w @ p
print("\nlazy walk on K_5 after 50 steps, TV =", mixing.total_variation(p, classical.uniform(5)))
