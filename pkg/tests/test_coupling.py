import math

import numpy as np
import pytest

from mechrobust.coupling import (
    CouplingSpec,
    MotifKind,
    Placement,
    load_pattern,
    motif_coupling,
    random_coupling,
    scaled_pattern,
)
from mechrobust.errors import InputError

TABLE_BUS = [
    [0, 1, 0, 0, 1, 0],
    [1, 0, 1, 0, 0, 1],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
]


def test_random_limits():
    assert not random_coupling(5, 7, 0.0, seed=1).any()
    assert random_coupling(5, 7, 1.0, seed=1).all()
    with pytest.raises(InputError):
        random_coupling(2, 2, 1.5)


def test_random_popcount_concentration():
    n = 54 * 233
    mu, sigma = n * 0.2, math.sqrt(n * 0.2 * 0.8)
    for seed in range(30):
        assert abs(random_coupling(54, 233, 0.2, seed).sum() - mu) <= 3 * sigma


@pytest.mark.parametrize("q", [0.05, 0.3, 0.7])
def test_random_density_converges(q):
    b = random_coupling(300, 400, q, seed=7)
    sigma = math.sqrt(q * (1 - q) / b.size)
    assert abs(b.mean() - q) <= 3 * sigma


def test_random_deterministic():
    assert np.array_equal(random_coupling(20, 30, 0.4, 3), random_coupling(20, 30, 0.4, 3))


@pytest.mark.parametrize("kind,row_sums", [
    ("bus", (2, 3, 2, 1, 1, 1)),
    ("ring", (2,) * 6),
    ("star", (5, 1, 1, 1, 1, 1)),
])
def test_builtin_patterns(kind, row_sums):
    p = MotifKind(kind).pattern
    assert p.shape == (6, 6)
    assert np.array_equal(p, p.T)
    assert tuple(p.sum(axis=1)) == row_sums


def test_star_single_block_matches_table():
    b = motif_coupling(6, 6, "star", Placement.SINGLE_BLOCK)
    assert b[0].tolist() == [False] + [True] * 5
    assert np.array_equal(b, MotifKind.STAR.pattern)


def test_bus_single_block_matches_table():
    b = motif_coupling(6, 6, "bus", "single")
    assert b.astype(int).tolist() == TABLE_BUS
    assert tuple(b.sum(axis=1)) == (2, 3, 2, 1, 1, 1)


@pytest.mark.parametrize("kind", list(MotifKind))
def test_scaled_pattern_reproduces_table_at_six(kind):
    assert np.array_equal(scaled_pattern(kind, 6), kind.pattern)


def test_scaled_patterns_at_other_sizes():
    ring = scaled_pattern("ring", 9)
    assert (ring.sum(axis=1) == 2).all()
    star = scaled_pattern("star", 9)
    assert star[0].sum() == 8 and star[1:].sum() == 8
    bus = scaled_pattern("bus", 9)
    assert bus.sum() == 2 * 8  # tree on 9 positions
    assert np.array_equal(bus, bus.T)


def test_ring_tiles():
    b = motif_coupling(12, 12, "ring")
    assert b.sum() == 24
    assert np.array_equal(b[:6, :6], MotifKind.RING.pattern)
    assert np.array_equal(b[6:, 6:], MotifKind.RING.pattern)
    assert not b[:6, 6:].any() and not b[6:, :6].any()


@pytest.mark.parametrize("kind", list(MotifKind))
@pytest.mark.parametrize("shape", [(54, 233), (100, 470), (13, 8)])
def test_stamp_fidelity_and_support(kind, shape):
    n_hw, n_sw = shape
    b = motif_coupling(n_hw, n_sw, kind)
    k = min(n_hw, n_sw)
    assert not b[k:, :].any() and not b[:, k:].any()
    tiles = k // 6
    for t in range(tiles):
        assert np.array_equal(b[6 * t:6 * t + 6, 6 * t:6 * t + 6], kind.pattern)
    assert b.sum() == tiles * kind.pattern.sum()
    single = motif_coupling(n_hw, n_sw, kind, "single")
    assert not single[k:, :].any() and not single[:, k:].any()


def test_too_small_section():
    with pytest.raises(InputError):
        motif_coupling(5, 10, "ring")


def test_permutation_option():
    hw_order = [5, 4, 3, 2, 1, 0]
    b = motif_coupling(6, 6, "star", hw_order=hw_order)
    assert b[5].sum() == 5 and b[0].sum() == 1
    with pytest.raises(InputError):
        motif_coupling(6, 6, "star", hw_order=[0, 0, 1, 2, 3, 4])


def test_custom_pattern_file(tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text("# triangle-ish\n0 1 1\n1 0 1\n1 1 0\n")
    pat = load_pattern(path)
    assert pat.shape == (3, 3)
    b = motif_coupling(7, 9, pat)
    assert b.sum() == 2 * 6
    spec = CouplingSpec("motif", pattern_path=str(path))
    assert np.array_equal(spec.build(7, 9), b)
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1\n")
    with pytest.raises(InputError):
        load_pattern(bad)


def test_matched_random_density():
    spec = CouplingSpec("matched_random", kind="bus")
    b = spec.build(54, 233, seed=1)
    target = motif_coupling(54, 233, "bus").mean()
    sigma = math.sqrt(target * (1 - target) / b.size)
    assert abs(b.mean() - target) <= 4 * sigma


def test_spec_validation():
    with pytest.raises(InputError):
        CouplingSpec("random")
    with pytest.raises(InputError):
        CouplingSpec("motif")
    with pytest.raises(InputError):
        CouplingSpec("wires", q=0.1)
