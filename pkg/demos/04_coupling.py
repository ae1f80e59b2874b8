"""
Coupling hardware and software
==============================

An integrated network joins two layers through a binary block: random bits
at density q, or an architectural motif stamped along the diagonal.
"""
from mechrobust import (
    MotifKind,
    ScaleFreeSpec,
    attack_sequence,
    compose_interdependent,
    generate_pw_standin,
    generate_scale_free,
    motif_coupling,
    random_coupling,
    robustness_coefficient,
)

for kind in MotifKind:
    print(kind.value)
    print(kind.pattern.astype(int))

hw = generate_pw_standin(seed=1)
sw = generate_scale_free(ScaleFreeSpec(233, 2, seed=2))
blocks = {
    "random 10%": random_coupling(hw.id_bound, sw.id_bound, 0.1, seed=3),
    "bus": motif_coupling(hw.id_bound, sw.id_bound, "bus"),
    "ring": motif_coupling(hw.id_bound, sw.id_bound, "ring"),
    "star": motif_coupling(hw.id_bound, sw.id_bound, "star"),
}
for name, b in blocks.items():
    lg = compose_interdependent(hw, sw, b)
    r = robustness_coefficient(attack_sequence(lg.graph, "betweenness")).r_percent
    # which layer does the attack hit first?
    first = [lg.layer_of(v).value for v in attack_sequence(lg.graph, "betweenness").removed[:10]]
    print(f"{name:11s} {int(b.sum()):5d} cross edges  R_betweenness={r:5.1f}  first ten: {' '.join(first)}")
