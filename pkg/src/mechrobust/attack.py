"""Sustained attacks: remove the current top-centrality (or a random) node until nothing is left."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import _kernels
from .errors import InputError
from .graph import Graph


class Strategy(str, Enum):
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"
    RANDOM = "random"


# relative slack when comparing floating betweenness sums for ties
BETWEENNESS_TIE_RTOL = 1e-9


@dataclass
class AttackTrace:
    """Removal order and largest-component sizes S_0..S_N."""

    removed: list[int]
    s_series: list[int]
    strategy: str
    seed: int | None = None
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.removed)


def _pick(candidates: np.ndarray, tie_break: str, rng) -> int:
    if tie_break == "lowest" or len(candidates) == 1:
        return int(candidates[0])
    return int(candidates[rng.integers(len(candidates))])


def _max_candidates(scores: np.ndarray, active: np.ndarray, rtol: float = 0.0) -> np.ndarray:
    ids = np.flatnonzero(active)
    vals = scores[ids]
    top = vals.max()
    if rtol:
        return ids[vals >= top - rtol * max(abs(top), 1.0)]
    return ids[vals == top]


def _component_after_removal(indptr, indices, active, v) -> np.ndarray:
    nb = indices[indptr[v]:indptr[v + 1]]
    return _kernels.reachable_from(indptr, indices, active, nb)


class _ShrinkingCSR:
    """CSR rebuilt without dead arcs whenever more than 5% of them are stale."""

    def __init__(self, g: Graph, active: np.ndarray):
        self.indptr, self.indices = g.csr
        self.active = active
        self.live = len(self.indices)

    def remove(self, v: int):
        nb = self.indices[self.indptr[v]:self.indptr[v + 1]]
        self.live -= 2 * int(self.active[nb].sum())
        self.active[v] = 0
        if self.live < 0.95 * len(self.indices):
            self.indptr, self.indices = _kernels.compact_csr(self.indptr, self.indices, self.active)
            self.live = len(self.indices)


def _degree_order(g, tie_break, rng):
    indptr, indices = g.csr
    active = g._active.copy()
    deg = g.degrees()
    order = []
    for _ in range(int(active.sum())):
        v = _pick(_max_candidates(deg, active), tie_break, rng)
        active[v] = 0
        order.append(v)
        nb = indices[indptr[v]:indptr[v + 1]]
        deg[nb[active[nb].astype(bool)]] -= 1
        deg[v] = 0
    return order


def _betweenness_order(g, tie_break, rng):
    active = g._active.copy()
    csr = _ShrinkingCSR(g, active)
    bc = np.zeros(g.id_bound, np.float64)
    _kernels.brandes_accumulate(csr.indptr, csr.indices, active, np.flatnonzero(active), bc)
    order = []
    for _ in range(int(active.sum())):
        v = _pick(_max_candidates(bc, active, BETWEENNESS_TIE_RTOL), tie_break, rng)
        comp = _component_after_removal(csr.indptr, csr.indices, _without(active, v), v)
        csr.remove(v)
        order.append(v)
        bc[v] = 0.0
        # only v's former component changes; other components keep bit-identical sums
        if len(comp):
            bc[comp] = 0.0
            _kernels.brandes_accumulate(csr.indptr, csr.indices, active, comp, bc)
    return order


def _without(active, v):
    mask = active.copy()
    mask[v] = 0
    return mask


def _closeness_order(g, tie_break, rng):
    active = g._active.copy()
    csr = _ShrinkingCSR(g, active)
    dsum = np.zeros(g.id_bound, np.int64)
    reach = np.zeros(g.id_bound, np.int64)
    _kernels.distance_sums(csr.indptr, csr.indices, active, np.flatnonzero(active), dsum, reach)
    order = []
    for _ in range(int(active.sum())):
        ids = np.flatnonzero(active)
        connected = ids[reach[ids] > 0]
        if len(connected):
            # max 1/dsum == min dsum, compared exactly on integers
            d = dsum[connected]
            candidates = connected[d == d.min()]
        else:
            candidates = ids
        v = _pick(candidates, tie_break, rng)
        comp = _component_after_removal(csr.indptr, csr.indices, _without(active, v), v)
        csr.remove(v)
        order.append(v)
        dsum[v] = 0
        reach[v] = 0
        if len(comp):
            _kernels.distance_sums(csr.indptr, csr.indices, active, comp, dsum, reach)
    return order


def _as_strategy(strategy) -> Strategy:
    try:
        return Strategy(strategy.value if isinstance(strategy, Strategy) else str(strategy).lower())
    except ValueError:
        raise InputError(f"unknown attack strategy {strategy!r}") from None


def attack_sequence(g: Graph, strategy, seed=None, tie_break: str = "lowest") -> AttackTrace:
    """Run a sustained attack on ``g`` until every node has been removed.

    Centralities are recomputed on the residual graph after each removal and
    the highest-scoring node goes next; ties go to the lowest id, or to a
    seeded uniform pick when ``tie_break="random"``. ``seed`` drives the
    random strategy and the random tie-break.
    """
    strategy = _as_strategy(strategy)
    if g.node_count < 1:
        raise InputError("cannot attack an empty graph")
    if tie_break not in ("lowest", "random"):
        raise InputError(f"tie_break must be 'lowest' or 'random', got {tie_break!r}")
    rng = np.random.default_rng(seed)
    if strategy is Strategy.RANDOM:
        order = [int(v) for v in rng.permutation(g.nodes())]
    elif strategy is Strategy.DEGREE:
        order = _degree_order(g, tie_break, rng)
    elif strategy is Strategy.BETWEENNESS:
        order = _betweenness_order(g, tie_break, rng)
    else:
        order = _closeness_order(g, tie_break, rng)
    s_series = _series(g, order)
    seed_out = seed if isinstance(seed, (int, np.integer)) else None
    return AttackTrace(order, s_series, strategy.value, seed_out, {"tie_break": tie_break})


def _series(g: Graph, order) -> list[int]:
    indptr, indices = g.csr
    return [int(s) for s in _kernels.largest_component_series(indptr, indices, np.asarray(order, np.int64))]


def replay_trace(g: Graph, removed) -> list[int]:
    """Recompute S_0..S_N for removing ``g``'s nodes in the order ``removed``."""
    removed = [int(v) for v in removed]
    if sorted(removed) != [int(v) for v in g.nodes()]:
        raise InputError("removal order is not a permutation of the graph's nodes")
    return _series(g, removed)
