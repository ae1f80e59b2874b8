"""Undirected simple graphs with tombstoned node removal, and HW/SW composition."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .errors import InputError


class Graph:
    """Undirected simple graph over integer ids ``0 .. id_bound-1``.

    Removing a node marks it inactive instead of renumbering, so ids stay
    stable for the lifetime of an attack. Instances are treated as immutable;
    :meth:`remove_node` returns a new graph sharing the edge arrays.
    """

    __slots__ = ("_n", "_edges", "_active", "_indptr", "_indices")

    def __init__(self, n: int, edges: np.ndarray, active: np.ndarray | None = None):
        # edges: canonical (E, 2) int64 array, u < v, lexicographically sorted, unique
        self._n = int(n)
        self._edges = edges
        self._active = np.ones(self._n, np.uint8) if active is None else active
        self._indptr, self._indices = _build_csr(self._n, edges)

    @classmethod
    def _with_mask(cls, g: Graph, active: np.ndarray) -> Graph:
        new = cls.__new__(cls)
        new._n = g._n
        new._edges = g._edges
        new._active = active
        new._indptr = g._indptr
        new._indices = g._indices
        return new

    @property
    def id_bound(self) -> int:
        """Size of the id space, including removed nodes."""
        return self._n

    @property
    def node_count(self) -> int:
        """Number of active nodes."""
        return int(self._active.sum())

    @property
    def edge_count(self) -> int:
        return len(self.edge_array())

    @property
    def active_mask(self) -> np.ndarray:
        return self._active.astype(bool)

    @property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) over the full id space, ignoring removals."""
        return self._indptr, self._indices

    def nodes(self) -> np.ndarray:
        return np.flatnonzero(self._active)

    def is_active(self, v: int) -> bool:
        return 0 <= v < self._n and bool(self._active[v])

    def edge_array(self) -> np.ndarray:
        """Active edges as a sorted (E, 2) array with u < v."""
        e = self._edges
        if len(e) == 0:
            return e
        keep = (self._active[e[:, 0]] & self._active[e[:, 1]]).astype(bool)
        return e[keep]

    def edges(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edge_array()]

    def neighbors(self, v: int) -> np.ndarray:
        if not self.is_active(v):
            raise InputError(f"node {v} is not in the graph")
        nb = self._indices[self._indptr[v]:self._indptr[v + 1]]
        return nb[self._active[nb].astype(bool)]

    def has_edge(self, u: int, v: int) -> bool:
        if not (self.is_active(u) and self.is_active(v)):
            return False
        return bool(np.any(self.neighbors(u) == v))

    def degrees(self) -> np.ndarray:
        """Active degree per id (0 for removed ids)."""
        deg = np.zeros(self._n, np.int64)
        e = self.edge_array()
        np.add.at(deg, e[:, 0], 1)
        np.add.at(deg, e[:, 1], 1)
        return deg

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), np.uint8)
        e = self.edge_array()
        a[e[:, 0], e[:, 1]] = 1
        a[e[:, 1], e[:, 0]] = 1
        return a

    def remove_node(self, v: int) -> Graph:
        return remove_node(self, v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._active, other._active)
            and np.array_equal(self.edge_array(), other.edge_array())
        )

    def __repr__(self):
        return f"Graph(nodes={self.node_count}, edges={self.edge_count}, id_bound={self._n})"


def _build_csr(n: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if len(edges) == 0:
        return np.zeros(n + 1, np.int64), np.zeros(0, np.int64)
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, np.ascontiguousarray(dst[order], dtype=np.int64)


def _canonical_edges(n: int, edges) -> np.ndarray:
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2) if len(edges) else np.zeros((0, 2), np.int64)
    if len(e) and (e.min() < 0 or e.max() >= n):
        bad = e[(e < 0).any(axis=1) | (e >= n).any(axis=1)][0]
        raise InputError(f"edge ({bad[0]}, {bad[1]}) has an endpoint outside [0, {n})")
    e = e[e[:, 0] != e[:, 1]]
    e = np.sort(e, axis=1)
    return np.unique(e, axis=0) if len(e) else np.zeros((0, 2), np.int64)


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph on ids ``0..n-1``; duplicates and self-loops are dropped."""
    if n < 0:
        raise InputError("node count must be non-negative")
    return Graph(n, _canonical_edges(n, edges))


def from_adjacency(a) -> Graph:
    """Graph from a square 0/1 matrix; any nonzero off-diagonal entry is an edge."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"adjacency matrix must be square, got shape {a.shape}")
    u, v = np.nonzero(a)
    return from_edge_list(a.shape[0], np.column_stack([u, v]))


def remove_node(g: Graph, v: int) -> Graph:
    """Return ``g`` with ``v`` and its incident edges removed (ids preserved)."""
    if not g.is_active(v):
        raise InputError(f"node {v} is not in the graph (never present or already removed)")
    active = g._active.copy()
    active[v] = 0
    return Graph._with_mask(g, active)


def component_sizes(g: Graph) -> np.ndarray:
    """Sizes of the connected components of the active subgraph."""
    labels = _kernels.component_labels(g._indptr, g._indices, g._active)
    labels = labels[labels >= 0]
    return np.bincount(labels) if len(labels) else np.zeros(0, np.int64)


def largest_component_size(g: Graph) -> int:
    sizes = component_sizes(g)
    return int(sizes.max()) if len(sizes) else 0


class Layer(Enum):
    HW = "HW"
    SW = "SW"


@dataclass(frozen=True)
class LayeredGraph:
    """Integrated hardware/software network.

    HW nodes hold ids ``[0, hw_count)``, SW nodes ``[hw_count, hw_count + sw_count)``.
    ``coupling`` is the HW x SW block the cross-layer edges were built from.
    """

    graph: Graph
    hw_count: int
    sw_count: int
    coupling: np.ndarray

    def layer_of(self, v: int) -> Layer:
        if not 0 <= v < self.hw_count + self.sw_count:
            raise InputError(f"node {v} outside the integrated network")
        return Layer.HW if v < self.hw_count else Layer.SW

    @property
    def layers(self) -> np.ndarray:
        return np.array(["HW"] * self.hw_count + ["SW"] * self.sw_count)


def compose_interdependent(hw: Graph, sw: Graph, coupling) -> LayeredGraph:
    """Assemble the block adjacency [[A, B], [B^T, D]] as one graph.

    ``coupling[i, j]`` set links HW node ``i`` to SW node ``hw.id_bound + j``.
    """
    b = np.asarray(coupling).astype(bool)
    n_hw, n_sw = hw.id_bound, sw.id_bound
    if b.shape != (n_hw, n_sw):
        raise InputError(f"coupling block has shape {b.shape}, expected ({n_hw}, {n_sw})")
    i, j = np.nonzero(b)
    cross = np.column_stack([i, j + n_hw])
    edges = np.concatenate([hw.edge_array(), sw.edge_array() + n_hw, cross])
    g = from_edge_list(n_hw + n_sw, edges)
    return LayeredGraph(graph=g, hw_count=n_hw, sw_count=n_sw, coupling=b.copy())
