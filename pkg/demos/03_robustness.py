"""
The robustness coefficient
==========================

R compares the area under the S_k curve with the triangle traced by an
ideal network that loses exactly one node per removal.
"""
from mechrobust import (
    ScaleFreeSpec,
    attack_sequence,
    from_edge_list,
    generate_scale_free,
    mean_robustness,
    robustness_coefficient,
    trapezium_area,
)

# a complete graph degrades ideally, whatever the order
k6 = from_edge_list(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
print("K6:", robustness_coefficient(attack_sequence(k6, "random", seed=1)).exact)

# losing the hub of a star shatters it at once
star = from_edge_list(5, [(0, i) for i in range(1, 5)])
r = robustness_coefficient(attack_sequence(star, "degree"))
print("star:", r.exact, "area", r.area_actual, "of", r.area_ideal)

series = [3, 1, 1, 0]
print("P3 betweenness:", robustness_coefficient(series).exact, "trapezia:", trapezium_area(series))

# random failures are stochastic; average over replicas
g = generate_scale_free(ScaleFreeSpec(470, 2, seed=11))
mean, std, values = mean_robustness([attack_sequence(g, "random", seed=s) for s in range(30)])
print(f"random failure on SF470: {mean:.1f} +/- {std:.1f} over {len(values)} runs")
