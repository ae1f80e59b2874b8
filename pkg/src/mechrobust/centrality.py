"""Degree, betweenness and closeness centrality on the active subgraph.

Scores are returned as float arrays indexed by node id; removed ids hold 0.
"""
from __future__ import annotations

import numpy as np

from . import _kernels
from .graph import Graph


def degree_centrality(g: Graph) -> np.ndarray:
    """Number of active neighbours of each node."""
    return g.degrees().astype(np.float64)


def raw_betweenness(g: Graph, sources=None) -> np.ndarray:
    """Unnormalised ordered-pair betweenness sum (Brandes accumulation)."""
    indptr, indices = g.csr
    if sources is None:
        sources = g.nodes()
    bc = np.zeros(g.id_bound, np.float64)
    _kernels.brandes_accumulate(indptr, indices, g._active, np.asarray(sources, np.int64), bc)
    return bc


def betweenness_centrality(g: Graph) -> np.ndarray:
    """Fraction of ordered shortest paths through each node.

    Normalised by ``(N-1)(N-2)`` with ``N`` the current active node count;
    unreachable pairs contribute nothing and ``N <= 2`` gives all zeros.
    """
    n = g.node_count
    bc = raw_betweenness(g)
    if n <= 2:
        return np.zeros_like(bc)
    return bc / ((n - 1) * (n - 2))


def distance_sums(g: Graph, sources=None) -> tuple[np.ndarray, np.ndarray]:
    """Hop-distance totals and reachable-peer counts for each source."""
    indptr, indices = g.csr
    if sources is None:
        sources = g.nodes()
    dsum = np.zeros(g.id_bound, np.int64)
    reach = np.zeros(g.id_bound, np.int64)
    _kernels.distance_sums(indptr, indices, g._active, np.asarray(sources, np.int64), dsum, reach)
    return dsum, reach


def closeness_centrality(g: Graph) -> np.ndarray:
    """Inverse total distance to the nodes reachable from each node.

    Nodes with no reachable peer score 0.
    """
    dsum, reach = distance_sums(g)
    cc = np.zeros(g.id_bound, np.float64)
    ok = reach > 0
    cc[ok] = 1.0 / dsum[ok]
    return cc


MEASURES = {
    "degree": degree_centrality,
    "betweenness": betweenness_centrality,
    "closeness": closeness_centrality,
}


def centrality(g: Graph, measure: str) -> dict[int, float]:
    """Scores of ``measure`` for every active node, keyed by node id."""
    values = MEASURES[measure](g)
    return {int(v): float(values[v]) for v in g.nodes()}
