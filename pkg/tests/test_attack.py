import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import complete, random_small_graph
from mechrobust.attack import attack_sequence, replay_trace
from mechrobust.centrality import MEASURES
from mechrobust.errors import InputError
from mechrobust.generators import ScaleFreeSpec, generate_scale_free
from mechrobust.graph import from_edge_list, remove_node

STRATEGIES = ["degree", "betweenness", "closeness", "random"]


def naive_attack(g, measure):
    """Full recomputation each step with the same tie rule (lowest id among maxima)."""
    order = []
    while g.node_count:
        scores = MEASURES[measure](g)
        ids = g.nodes()
        vals = scores[ids]
        top = vals.max()
        if measure == "betweenness":
            cand = ids[vals >= top - 1e-9 * max(abs(top), 1.0)]
        else:
            cand = ids[vals == top]
        v = int(cand[0])
        order.append(v)
        g = remove_node(g, v)
    return order


def test_k3_degree():
    t = attack_sequence(complete(3), "degree")
    assert t.removed == [0, 1, 2]
    assert t.s_series == [3, 2, 1, 0]


def test_p3_betweenness(p3):
    t = attack_sequence(p3, "betweenness")
    assert t.removed[0] == 1
    assert t.s_series == [3, 1, 1, 0]


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_complete_graph_random(seed):
    t = attack_sequence(complete(7), "random", seed=seed)
    assert t.s_series == list(range(7, -1, -1))
    assert sorted(t.removed) == list(range(7))


def test_empty_graph_rejected():
    with pytest.raises(InputError):
        attack_sequence(from_edge_list(0, []), "degree")


def test_unknown_strategy(p3):
    with pytest.raises(InputError):
        attack_sequence(p3, "eigenvector")


def test_replay_examples(p3, star5):
    assert replay_trace(star5, [0, 1, 2, 3, 4]) == [5, 1, 1, 1, 1, 0]
    assert replay_trace(p3, [0, 1, 2]) == [3, 2, 1, 0]
    with pytest.raises(InputError):
        replay_trace(p3, [0, 0, 2])
    with pytest.raises(InputError):
        replay_trace(p3, [0, 1])


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_replay_reproduces_attack(strategy):
    g = generate_scale_free(ScaleFreeSpec(120, 2, seed=3))
    t = attack_sequence(g, strategy, seed=5)
    assert replay_trace(g, t.removed) == t.s_series


@pytest.mark.parametrize("measure", ["degree", "betweenness", "closeness"])
def test_incremental_engine_matches_full_recomputation(measure):
    rng = random.Random(12)
    for _ in range(40):
        n, edges = random_small_graph(rng, 12)
        if n == 0:
            continue
        g = from_edge_list(n, edges)
        assert attack_sequence(g, measure).removed == naive_attack(g, measure)
    g = generate_scale_free(ScaleFreeSpec(80, 2, seed=1))
    assert attack_sequence(g, measure).removed == naive_attack(g, measure)


def test_first_pick_matches_oracle_argmax():
    rng = random.Random(4)
    for _ in range(40):
        n, edges = random_small_graph(rng, 8)
        if n == 0:
            continue
        adj = oracles.adjacency(n, edges)
        g = from_edge_list(n, edges)
        for measure, fn in (("degree", oracles.degree), ("closeness", oracles.closeness),
                            ("betweenness", oracles.betweenness)):
            scores = fn(adj)
            top = max(scores.values())
            want = min(v for v, x in scores.items() if abs(x - top) <= 1e-9)
            assert attack_sequence(g, measure).removed[0] == want


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from(STRATEGIES))
def test_trace_shape_and_monotone(seed, strategy):
    n, edges = random_small_graph(random.Random(seed), 14)
    if n == 0:
        return
    g = from_edge_list(n, edges)
    t = attack_sequence(g, strategy, seed=seed)
    assert len(t.removed) == n and len(t.s_series) == n + 1
    assert sorted(t.removed) == list(range(n))
    assert t.s_series[-1] == 0
    assert all(b <= a for a, b in zip(t.s_series, t.s_series[1:]))
    assert t.s_series == [oracles.largest_component(oracles.adjacency(n, edges, t.removed[:k]))
                          for k in range(n + 1)]


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_determinism(strategy):
    g = generate_scale_free(ScaleFreeSpec(150, 2, seed=8))
    a = attack_sequence(g, strategy, seed=21)
    b = attack_sequence(g, strategy, seed=21)
    assert a.removed == b.removed


def test_random_tie_break_is_seeded():
    g = complete(10)
    a = attack_sequence(g, "betweenness", seed=1, tie_break="random")
    b = attack_sequence(g, "betweenness", seed=1, tie_break="random")
    c = attack_sequence(g, "betweenness", seed=2, tie_break="random")
    assert a.removed == b.removed
    assert a.removed != c.removed
    assert attack_sequence(g, "betweenness").removed == list(range(10))


def test_attack_on_partially_removed_graph():
    g = remove_node(complete(5), 2)
    t = attack_sequence(g, "degree")
    assert sorted(t.removed) == [0, 1, 3, 4]
    assert t.s_series == [4, 3, 2, 1, 0]
