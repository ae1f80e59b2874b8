"""Acceptance gate. Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL/SKIP line per criterion.

The reproduction tables are computed once per session (30 replicas each) and
shared; their wall-clock times feed the performance criterion.
"""
import os
import random
import time
from fractions import Fraction

import pytest

import oracles
from conftest import complete, random_small_graph
from mechrobust.attack import attack_sequence, replay_trace
from mechrobust.centrality import centrality
from mechrobust.coupling import random_coupling
from mechrobust.experiment import run_experiment
from mechrobust.generators import ScaleFreeSpec, generate_pw_standin, generate_scale_free
from mechrobust.graph import compose_interdependent, from_edge_list
from mechrobust.presets import ALL_STRATEGIES, PRESETS, SW_SIZES, pw_engine
from mechrobust.robustness import robustness_coefficient

CENTRALITY = ("degree", "betweenness", "closeness")
TABLES = ("table2", "table4", "table5", "table6", "table7", "table8")


class Reproduction:
    def __init__(self):
        self.tables, self.seconds = {}, {}

    def __call__(self, name):
        if name not in self.tables:
            t0 = time.perf_counter()
            self.tables[name] = run_experiment(PRESETS[name](), write=False)
            self.seconds[name] = time.perf_counter() - t0
            assert not self.tables[name].failures
        return self.tables[name]


@pytest.fixture(scope="session")
def repro():
    return Reproduction()


@pytest.mark.criterion(1, "R(K_n) = 100 for n in 2..50 under every strategy, < 5 s")
def test_criterion_1_complete_graphs():
    t0 = time.perf_counter()
    for n in range(2, 51):
        g = complete(n)
        for s in ALL_STRATEGIES:
            r = robustness_coefficient(attack_sequence(g, s, seed=n))
            assert r.exact == 100, (n, s)
    assert time.perf_counter() - t0 < 5.0


@pytest.mark.criterion(2, "centralities match brute force on 100 graphs; replay reproduces traces")
def test_criterion_2_oracle_equivalence():
    rng = random.Random(2)
    fns = {"degree": oracles.degree, "betweenness": oracles.betweenness, "closeness": oracles.closeness}
    for _ in range(100):
        n, edges = random_small_graph(rng, 8)
        g = from_edge_list(n, edges)
        adj = oracles.adjacency(n, edges)
        for m, fn in fns.items():
            got, want = centrality(g, m), fn(adj)
            assert all(abs(got[v] - want[v]) <= 1e-9 for v in want)
        for s in ALL_STRATEGIES:
            t = attack_sequence(g, s, seed=n)
            assert replay_trace(g, t.removed) == t.s_series


@pytest.mark.criterion(3, "P3 betweenness R = 700/9, K1,4 hub-first R = 52")
def test_criterion_3_hand_fixtures():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert robustness_coefficient(attack_sequence(p3, "betweenness")).exact == Fraction(700, 9)
    star = from_edge_list(5, [(0, i) for i in range(1, 5)])
    t = attack_sequence(star, "degree")
    assert t.removed[0] == 0
    assert robustness_coefficient(t).exact == 52


@pytest.mark.criterion(4, "modular HW: p=0 near (22,22,36,24), p>0 all >= 75, < 2 min")
def test_criterion_4_modular_hardware(repro):
    tab = repro("table2")
    target = dict(zip(ALL_STRATEGIES, (22, 22, 36, 24)))
    for s in ALL_STRATEGIES:
        base = tab.mean(hw="p=0.0", strategy=s)
        assert abs(base - target[s]) <= 10, (s, base)
        for p in ("p=0.2", "p=0.5", "p=0.8"):
            assert tab.mean(hw=p, strategy=s) >= 75, (p, s)
            assert tab.mean(hw=p, strategy=s) > base
    assert repro.seconds["table2"] < 120


@pytest.mark.criterion(5, "scale-free SW: random in [60,85], betweenness <= 35, b <= d < c < r")
@pytest.mark.parametrize("n", SW_SIZES)
def test_criterion_5_scale_free(repro, n):
    tab = repro("table4")
    m = {s: tab.mean(sw=f"SF{n}", strategy=s) for s in ALL_STRATEGIES}
    assert m["betweenness"] <= 35
    assert m["betweenness"] <= m["degree"] < m["closeness"] < m["random"]
    assert 60 <= m["random"] <= 85, m["random"]


@pytest.mark.criterion(6, "PW + SF random coupling: betweenness falls with SW size, flat in q, random >= 90")
def test_criterion_6_random_integration(repro):
    tab = repro("table6")
    levels = ("10%", "20%", "50%")
    for q in levels:
        b = [tab.mean("PW", f"SF{n}", q, "betweenness") for n in SW_SIZES]
        assert b[0] > b[1] > b[2], (q, b)
    for n in SW_SIZES:
        for s in CENTRALITY:
            vals = [tab.mean("PW", f"SF{n}", q, s) for q in levels]
            assert max(vals) - min(vals) <= 5, (n, s, vals)
        for q in levels:
            assert tab.mean("PW", f"SF{n}", q, "random") >= 90


@pytest.mark.criterion(7, "motif coupling: star lowest under betweenness, random within 10 of best")
@pytest.mark.parametrize("table,hws,sw", [
    ("table7", ("Modular", "HM"), "SF470"),
    ("table8", ("PW",), "SF233"),
])
def test_criterion_7_motifs(repro, table, hws, sw):
    tab = repro(table)
    for hw in hws:
        bet = {k: tab.mean(hw, sw, k, "betweenness") for k in ("Bus", "Ring", "Star")}
        assert bet["Star"] < min(bet["Bus"], bet["Ring"]), (hw, bet)
        for s in ALL_STRATEGIES:
            best = max(tab.mean(hw, sw, k, s) for k in ("Bus", "Ring", "Star"))
            assert abs(tab.mean(hw, sw, "Random", s) - best) <= 10, (hw, s)


@pytest.mark.criterion(8, "same config and base seed give byte-identical output files")
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_criterion_8_determinism(tmp_path, fmt):
    cfg = PRESETS["table8"](replicas=3, base_seed=17)
    paths = []
    for i in range(2):
        out = tmp_path / f"run{i}.{fmt}"
        run_experiment(cfg.with_overrides(output_path=str(out), output_format=fmt))
        paths.append(out)
    assert paths[0].read_bytes() == paths[1].read_bytes()


@pytest.mark.criterion(9, "full reproduction < 30 min; 524-node betweenness attack < 60 s")
def test_criterion_9_performance(repro):
    hw = generate_pw_standin(seed=1)
    sw = generate_scale_free(ScaleFreeSpec(470, 2, seed=1))
    g = compose_interdependent(hw, sw, random_coupling(54, 470, 0.1, seed=1)).graph
    assert g.node_count == 524
    t0 = time.perf_counter()
    attack_sequence(g, "betweenness")
    assert time.perf_counter() - t0 < 60
    for name in TABLES:
        repro(name)
    total = sum(repro.seconds[name] for name in TABLES)
    print(f"reproduction suite: {total:.0f} s", {k: round(v) for k, v in repro.seconds.items()})
    assert total < 30 * 60


@pytest.mark.criterion(10, "genuine PW DSM: means within 10 of (85, 68, 79, 91)")
def test_criterion_10_pw_engine():
    path = os.environ.get("MECHROBUST_PW_DSM")
    if not path or not os.path.exists(path):
        pytest.skip("set MECHROBUST_PW_DSM to the engine DSM file to run this check")
    tab = run_experiment(pw_engine(path), write=False)
    for s, want in zip(ALL_STRATEGIES, (85, 68, 79, 91)):
        assert abs(tab.mean(hw="PW", strategy=s) - want) <= 10, s
