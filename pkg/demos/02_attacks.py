"""
Centrality and sustained attacks
================================

Score nodes, then remove the top node again and again, tracking the size of
the largest connected component.
"""
from mechrobust import (
    ScaleFreeSpec,
    attack_sequence,
    centrality,
    from_edge_list,
    generate_scale_free,
    robustness_coefficient,
)

# a path on three nodes: the middle node carries every shortest path
p3 = from_edge_list(3, [(0, 1), (1, 2)])
for measure in ("degree", "betweenness", "closeness"):
    print(measure, centrality(p3, measure))

trace = attack_sequence(p3, "betweenness")
print("removed", trace.removed, "S_k", trace.s_series)

g = generate_scale_free(ScaleFreeSpec(233, 2, seed=7))
for strategy in ("degree", "betweenness", "closeness", "random"):
    t = attack_sequence(g, strategy, seed=0)
    # LCC after 10% and 30% of the nodes are gone
    k1, k3 = len(t.removed) // 10, 3 * len(t.removed) // 10
    print(f"{strategy:12s} first hits {t.removed[:3]}  S at 10%: {t.s_series[k1]}  at 30%: {t.s_series[k3]}"
          f"  R={robustness_coefficient(t).r_percent:.1f}")
