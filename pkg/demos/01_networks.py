"""
Synthetic networks
==================

Modular hardware architectures, their hierarchically rewired variants, and
preferential-attachment software graphs.
"""
import numpy as np

from mechrobust import (
    ModularSpec,
    ScaleFreeSpec,
    generate_hierarchical_modular,
    generate_modular,
    generate_scale_free,
    largest_component_size,
)

# five disjoint 20-node cliques
spec = ModularSpec(n=100, m_modules=5, seed=1)
g = generate_modular(spec)
print("modular:", g.node_count, "nodes,", g.edge_count, "edges, LCC", largest_component_size(g))

# rewiring moves one end of each intra-module edge into another module with probability p
for p in (0.2, 0.5, 0.8):
    hm, stats = generate_hierarchical_modular(ModularSpec(100, 5, p=p, seed=1), return_stats=True)
    mod = spec.module_of()
    u, v = hm.edge_array().T
    print(f"p={p}: {stats.rewired} edges rewired, {np.mean(mod[u] != mod[v]):.2f} of edges cross modules,"
          f" LCC {largest_component_size(hm)}")

# scale-free software graphs grow by degree-proportional attachment
sf = generate_scale_free(ScaleFreeSpec(470, m_attach=2, seed=3))
deg = sf.degrees()
print("scale-free: max degree", deg.max(), "median", int(np.median(deg)), "edges", sf.edge_count)
