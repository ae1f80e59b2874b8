"""Numba kernels over CSR adjacency with an activity mask.

All kernels take ``indptr``/``indices`` (CSR of the full id space) and an
``active`` uint8 mask; inactive nodes and their incident edges are ignored.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def component_labels(indptr, indices, active):
    """Label active nodes by connected component; inactive nodes get -1."""
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    label = 0
    for s in range(n):
        if not active[s] or labels[s] >= 0:
            continue
        labels[s] = label
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if active[w] and labels[w] < 0:
                    labels[w] = label
                    queue[tail] = w
                    tail += 1
        label += 1
    return labels


@njit(cache=True)
def reachable_from(indptr, indices, active, seeds):
    """Sorted ids of active nodes reachable from any of ``seeds``."""
    n = indptr.shape[0] - 1
    seen = np.zeros(n, np.uint8)
    queue = np.empty(n, np.int64)
    tail = 0
    for s in seeds:
        if active[s] and not seen[s]:
            seen[s] = 1
            queue[tail] = s
            tail += 1
    head = 0
    while head < tail:
        v = queue[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if active[w] and not seen[w]:
                seen[w] = 1
                queue[tail] = w
                tail += 1
    return np.sort(queue[:tail])


@njit(cache=True)
def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit(cache=True)
def largest_component_series(indptr, indices, order):
    """S_k for k = 0..N when nodes are removed in ``order``.

    Runs the removal backwards: nodes are re-inserted in reverse order and
    merged by union-find, so the whole series costs near-linear time. Nodes
    absent from ``order`` are treated as inactive throughout.
    """
    n = indptr.shape[0] - 1
    m = order.shape[0]
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    present = np.zeros(n, np.uint8)
    series = np.zeros(m + 1, np.int64)
    best = 0
    for i in range(m - 1, -1, -1):
        v = order[i]
        present[v] = 1
        if best < 1:
            best = 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if not present[w]:
                continue
            a = _find(parent, v)
            b = _find(parent, w)
            if a == b:
                continue
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
            if size[a] > best:
                best = size[a]
        series[i] = best
    return series


@njit(cache=True)
def compact_csr(indptr, indices, active):
    """Drop arcs touching inactive nodes; neighbour order is preserved."""
    n = indptr.shape[0] - 1
    new_ptr = np.zeros(n + 1, np.int64)
    count = 0
    for v in range(n):
        if active[v]:
            for p in range(indptr[v], indptr[v + 1]):
                if active[indices[p]]:
                    count += 1
        new_ptr[v + 1] = count
    new_idx = np.empty(count, indices.dtype)
    k = 0
    for v in range(n):
        if active[v]:
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if active[w]:
                    new_idx[k] = w
                    k += 1
    return new_ptr, new_idx


# Distance and betweenness kernels run up to 64 sources through one BFS:
# each node carries a 64-bit word of the sources that have reached it, and
# set bits are decoded with a de Bruijn lookup.
_ONE = np.uint64(1)
_DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
_SHIFT = np.uint64(58)
_DB_TABLE = np.zeros(64, np.int64)
for _i in range(64):
    _DB_TABLE[((1 << _i) * 0x03F79D71B4CB0A89 & 0xFFFFFFFFFFFFFFFF) >> 58] = _i


@njit(cache=True, inline="always")
def _bit_index(low):
    return _DB_TABLE[(low * _DEBRUIJN) >> _SHIFT]


@njit(cache=True)
def _expand_level(indptr, indices, active, ent_node, lo, hi, ne, front, nxt, seen, touched, nt):
    """Push the level held in ent_node[lo:hi] one hop; append newly reached nodes."""
    for e in range(lo, hi):
        v = ent_node[e]
        f = front[v]
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if not active[w]:
                continue
            new = f & ~seen[w]
            if new:
                if seen[w] == 0:
                    touched[nt] = w
                    nt += 1
                if nxt[w] == 0:
                    ent_node[ne] = w
                    ne += 1
                nxt[w] |= new
                seen[w] |= new
    return ne, nt


@njit(cache=True)
def distance_sums(indptr, indices, active, sources, dsum, reach):
    """Total hop distance and reachable-peer count for each of ``sources``."""
    n = indptr.shape[0] - 1
    srcs = sources[active[sources] != 0]
    seen = np.zeros(n, np.uint64)
    front = np.zeros(n, np.uint64)
    nxt = np.zeros(n, np.uint64)
    # current level followed by the next; a node may sit in both
    ent_node = np.empty(2 * n, np.int64)
    touched = np.empty(n, np.int64)
    for start in range(0, srcs.shape[0], 64):
        batch = srcs[start:start + 64]
        nt = 0
        for j in range(batch.shape[0]):
            s = batch[j]
            seen[s] = _ONE << np.uint64(j)
            front[s] = seen[s]
            ent_node[j] = s
            touched[nt] = s
            nt += 1
            dsum[s] = 0
            reach[s] = 0
        lo, hi = 0, batch.shape[0]
        level = 0
        while hi > lo:
            level += 1
            # the next level is written after the current one, then slid down
            ne, nt = _expand_level(indptr, indices, active, ent_node, lo, hi, hi, front, nxt, seen, touched, nt)
            for e in range(lo, hi):
                front[ent_node[e]] = 0
            k = 0
            for e in range(hi, ne):
                w = ent_node[e]
                m = nxt[w]
                front[w] = m
                nxt[w] = 0
                ent_node[k] = w
                k += 1
                while m:
                    low = m & (~m + _ONE)
                    s = batch[_bit_index(low)]
                    dsum[s] += level
                    reach[s] += 1
                    m ^= low
            lo, hi = 0, k
        for i in range(nt):
            seen[touched[i]] = 0


@njit(cache=True)
def brandes_accumulate(indptr, indices, active, sources, bc):
    """Add the single-source dependencies of each of ``sources`` into ``bc``.

    Summing over every active source gives the ordered-pair betweenness sum.
    Sources must be sorted. Path counts and dependencies are pulled over each node's adjacency in
    CSR order, so every per-source value is independent of how sources are
    grouped into batches; ``bc[v]`` then receives them in source order.
    """
    n = indptr.shape[0] - 1
    srcs = sources[active[sources] != 0]
    seen = np.zeros(n, np.uint64)
    front = np.zeros(n, np.uint64)
    nxt = np.zeros(n, np.uint64)
    sigma = np.zeros((n, 64))
    delta = np.zeros((n, 64))
    coef = np.zeros((n, 64))
    # (node, bits) per BFS level; a node appears at most once per source
    ent_node = np.empty(n * 64, np.int64)
    ent_bits = np.empty(n * 64, np.uint64)
    lvl_ptr = np.empty(n + 2, np.int64)
    touched = np.empty(n, np.int64)
    for start in range(0, srcs.shape[0], 64):
        batch = srcs[start:start + 64]
        nt = 0
        for j in range(batch.shape[0]):
            s = batch[j]
            bit = _ONE << np.uint64(j)
            seen[s] = bit
            front[s] = bit
            sigma[s, j] = 1.0
            ent_node[j] = s
            ent_bits[j] = bit
            touched[nt] = s
            nt += 1
        ne = batch.shape[0]
        lvl_ptr[0] = 0
        lvl_ptr[1] = ne
        nlev = 1
        while True:
            lo = lvl_ptr[nlev - 1]
            hi = lvl_ptr[nlev]
            ne, nt = _expand_level(indptr, indices, active, ent_node, lo, hi, ne, front, nxt, seen, touched, nt)
            if ne == hi:
                break
            for e in range(hi, ne):
                w = ent_node[e]
                bw = nxt[w]
                ent_bits[e] = bw
                for p in range(indptr[w], indptr[w + 1]):
                    v = indices[p]
                    m = bw & front[v]
                    while m:
                        low = m & (~m + _ONE)
                        b = _bit_index(low)
                        sigma[w, b] += sigma[v, b]
                        m ^= low
            for e in range(lo, hi):
                front[ent_node[e]] = 0
            for e in range(hi, ne):
                w = ent_node[e]
                front[w] = nxt[w]
                nxt[w] = 0
            nlev += 1
            lvl_ptr[nlev] = ne
        for e in range(lvl_ptr[nlev - 1], lvl_ptr[nlev]):
            front[ent_node[e]] = 0

        for k in range(nlev - 1, 0, -1):
            lo = lvl_ptr[k]
            hi = lvl_ptr[k + 1]
            for e in range(lo, hi):
                w = ent_node[e]
                m = ent_bits[e]
                front[w] = m
                while m:
                    low = m & (~m + _ONE)
                    b = _bit_index(low)
                    coef[w, b] = (1.0 + delta[w, b]) / sigma[w, b]
                    m ^= low
            for e in range(lvl_ptr[k - 1], lo):
                v = ent_node[e]
                bv = ent_bits[e]
                for p in range(indptr[v], indptr[v + 1]):
                    w = indices[p]
                    m = bv & front[w]
                    while m:
                        low = m & (~m + _ONE)
                        b = _bit_index(low)
                        delta[v, b] += sigma[v, b] * coef[w, b]
                        m ^= low
            for e in range(lo, hi):
                front[ent_node[e]] = 0

        for i in range(nt):
            v = touched[i]
            m = seen[v]
            while m:
                low = m & (~m + _ONE)
                b = _bit_index(low)
                if batch[b] != v:
                    bc[v] += delta[v, b]
                sigma[v, b] = 0.0
                delta[v, b] = 0.0
                coef[v, b] = 0.0
                m ^= low
            seen[v] = 0
