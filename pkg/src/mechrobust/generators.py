"""Synthetic network families: modular, hierarchical modular, scale-free."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import Graph, from_edge_list


@dataclass(frozen=True)
class ModularSpec:
    """``m_modules`` equal blocks of ``n // m_modules`` nodes.

    Each intra-module pair is linked with probability ``base_density``;
    ``p`` is the per-edge rewiring probability (0 gives a perfectly
    modular network).
    """

    n: int
    m_modules: int
    base_density: float = 1.0
    p: float = 0.0
    seed: int | None = None

    def __post_init__(self):
        if self.n < 1 or self.m_modules < 1:
            raise InputError("n and m_modules must be positive")
        if self.n % self.m_modules:
            raise InputError(f"n={self.n} is not divisible by m_modules={self.m_modules}")
        if not 0.0 < self.base_density <= 1.0:
            raise InputError("base_density must lie in (0, 1]")
        if not 0.0 <= self.p <= 1.0:
            raise InputError("rewiring probability p must lie in [0, 1]")

    @property
    def module_size(self) -> int:
        return self.n // self.m_modules

    def module_of(self) -> np.ndarray:
        return np.arange(self.n) // self.module_size


@dataclass(frozen=True)
class ScaleFreeSpec:
    """Preferential attachment with ``m_attach`` edges per arriving node.

    ``preprune_fraction`` deletes that share of nodes uniformly at random
    after growth; isolated nodes are then pruned and ids renumbered.
    """

    n: int
    m_attach: int = 2
    seed: int | None = None
    preprune_fraction: float = 0.0

    def __post_init__(self):
        if self.m_attach < 1:
            raise InputError("m_attach must be at least 1")
        if self.m_attach >= self.n:
            raise InputError(f"m_attach={self.m_attach} must be smaller than n={self.n}")
        if not 0.0 <= self.preprune_fraction < 1.0:
            raise InputError("preprune_fraction must lie in [0, 1)")


@dataclass(frozen=True)
class RewireStats:
    selected: int
    rewired: int
    skipped: int


def _modular_edges(spec: ModularSpec, rng: np.random.Generator) -> np.ndarray:
    k = spec.module_size
    iu, ju = np.triu_indices(k, 1)
    blocks = []
    for m in range(spec.m_modules):
        if spec.base_density < 1.0:
            keep = rng.random(len(iu)) < spec.base_density
            blocks.append(np.column_stack([iu[keep], ju[keep]]) + m * k)
        else:
            blocks.append(np.column_stack([iu, ju]) + m * k)
    return np.concatenate(blocks) if blocks else np.zeros((0, 2), np.int64)


def generate_modular(spec: ModularSpec) -> Graph:
    """Disjoint modules with no inter-module edges. ``spec.p`` must be 0."""
    if spec.p != 0.0:
        raise InputError("generate_modular expects p = 0; use generate_hierarchical_modular")
    rng = np.random.default_rng(spec.seed)
    return from_edge_list(spec.n, _modular_edges(spec, rng))


def rewire_modular(g: Graph, module_of: np.ndarray, p: float, rng) -> tuple[Graph, RewireStats]:
    """Move one endpoint of each intra-module edge to another module with probability ``p``.

    Edges are visited in sorted order. For a selected edge, one endpoint is
    kept (chosen uniformly) and the other is replaced by a uniformly chosen
    node outside the kept endpoint's module. Moves that would duplicate an
    existing edge are skipped and the edge stays put.
    """
    rng = np.random.default_rng(rng)
    module_of = np.asarray(module_of)
    n = g.id_bound
    edge_set = set(g.edges())
    selected = rewired = skipped = 0
    for u, v in g.edges():
        if module_of[u] != module_of[v]:
            continue
        if rng.random() >= p:
            continue
        selected += 1
        keep = (u, v)[int(rng.integers(2))]
        outside = np.flatnonzero(module_of != module_of[keep])
        if len(outside) == 0:
            skipped += 1
            continue
        target = int(outside[rng.integers(len(outside))])
        new = (min(keep, target), max(keep, target))
        if new in edge_set:
            skipped += 1
            continue
        edge_set.remove((u, v))
        edge_set.add(new)
        rewired += 1
    out = from_edge_list(n, sorted(edge_set))
    return out, RewireStats(selected, rewired, skipped)


def generate_hierarchical_modular(spec: ModularSpec, return_stats: bool = False):
    """Modular base network followed by cross-module rewiring at rate ``spec.p``."""
    rng = np.random.default_rng(spec.seed)
    base = from_edge_list(spec.n, _modular_edges(spec, rng))
    if spec.p == 0.0:
        out, stats = base, RewireStats(0, 0, 0)
    else:
        out, stats = rewire_modular(base, spec.module_of(), spec.p, rng)
    return (out, stats) if return_stats else out


def generate_scale_free(spec: ScaleFreeSpec) -> Graph:
    """Barabasi-Albert growth from a clique of ``m_attach + 1`` nodes."""
    rng = np.random.default_rng(spec.seed)
    m, n = spec.m_attach, spec.n
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    # each node appears once per incident edge end, so uniform draws are degree-proportional
    ends = [v for e in edges for v in e]
    for t in range(m + 1, n):
        targets: list[int] = []
        while len(targets) < m:
            c = ends[int(rng.integers(len(ends)))]
            if c not in targets:
                targets.append(c)
        for c in targets:
            edges.append((c, t))
            ends.extend((c, t))
    g = from_edge_list(n, edges)
    if spec.preprune_fraction > 0.0:
        k = int(round(spec.preprune_fraction * n))
        drop = rng.choice(n, size=k, replace=False)
        keep = np.ones(n, bool)
        keep[drop] = False
        e = g.edge_array()
        e = e[keep[e[:, 0]] & keep[e[:, 1]]]
        g = prune_isolated(from_edge_list(n, e))
    return g


def prune_isolated(g: Graph) -> Graph:
    """Drop degree-0 (and removed) nodes and renumber the rest densely."""
    deg = g.degrees()
    keep = np.flatnonzero(deg > 0)
    remap = np.full(g.id_bound, -1, np.int64)
    remap[keep] = np.arange(len(keep))
    e = g.edge_array()
    return from_edge_list(len(keep), remap[e] if len(e) else e)


def generate_pw_standin(seed=None) -> Graph:
    """54-node connected stand-in for the Pratt & Whitney engine component DSM.

    Six 9-node clique modules rewired at p = 0.3 (about 216 edges, mean degree
    near 8), mimicking a modular aero-engine architecture. Use
    :func:`mechrobust.io.read_dsm` to load the real matrix when available.
    """
    return generate_hierarchical_modular(ModularSpec(n=54, m_modules=6, p=0.3, seed=seed))


def generate(spec) -> Graph:
    if isinstance(spec, ScaleFreeSpec):
        return generate_scale_free(spec)
    if isinstance(spec, ModularSpec):
        return generate_modular(spec) if spec.p == 0.0 else generate_hierarchical_modular(spec)
    raise InputError(f"unknown generator spec {spec!r}")
