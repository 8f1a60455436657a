"""Density, uniform density and the degree/cycle necessary conditions.

All comparisons are exact; densities are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

import numpy as np

from .errors import CBOError
from .graph import Graph

MAX_UNIFORM_N = 24


def density(g: Graph) -> Fraction:
    """|E| / (|V| - 1)."""
    if g.n < 2:
        raise CBOError("density needs at least 2 vertices")
    return Fraction(g.m, g.n - 1)


def _induced_edge_counts(g: Graph) -> np.ndarray:
    """Edge count of the induced subgraph on every vertex subset.

    Vertex v is bit v-1 of the subset mask.
    """
    n = g.n
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u - 1] |= 1 << (v - 1)
        nbr[v - 1] |= 1 << (u - 1)
    counts = np.zeros(1 << n, dtype=np.int16)
    for i in range(n):
        lo = np.arange(1 << i, dtype=np.int64)
        # subsets whose highest vertex is i: add the edges from i into the rest
        counts[(1 << i) : (1 << (i + 1))] = counts[: 1 << i] + np.bitwise_count(lo & nbr[i])
    return counts


def _mask_vertices(mask: int) -> tuple[int, ...]:
    return tuple(v + 1 for v in range(mask.bit_length()) if mask >> v & 1)


def max_subgraph_density(g: Graph) -> tuple[Fraction, tuple[int, ...]]:
    """Largest density over vertex subsets of size >= 2, with a witness.

    The densest subgraph on a fixed vertex set keeps every induced edge, so
    this is also the maximum over all subgraphs.  The witness is the
    lexicographically smallest maximizing vertex set.
    """
    if g.n < 2:
        raise CBOError("density needs at least 2 vertices")
    if g.n > MAX_UNIFORM_N:
        raise CBOError(f"exhaustive subset scan is limited to n <= {MAX_UNIFORM_N}")
    counts = _induced_edge_counts(g).astype(np.int64)
    sizes = np.bitwise_count(np.arange(1 << g.n, dtype=np.int64)).astype(np.int64)
    best = max(
        Fraction(int(counts[sizes == k].max()), k - 1) for k in range(2, g.n + 1)
    )
    hits = np.flatnonzero(
        (sizes >= 2) & (counts * best.denominator == best.numerator * (sizes - 1))
    )
    witness = min(_mask_vertices(int(mask)) for mask in hits)
    return best, witness


def is_uniformly_dense(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """True iff no subgraph is denser than g; otherwise a densest vertex set."""
    best, witness = max_subgraph_density(g)
    if best <= density(g):
        return True, None
    return False, witness


def min_degree_necessary(g: Graph) -> bool:
    """Every vertex has degree at least |E| / (|V| - 1)."""
    if g.n < 2:
        raise CBOError("density needs at least 2 vertices")
    deg = g.degrees()
    return all(deg[v] * (g.n - 1) >= g.m for v in range(1, g.n + 1))


def broken_wheel_cycle_bound(n: int, r: int, s: int) -> bool:
    """Whether a shortest cycle of s vertices meets s >= (n-1)/r + 1.

    Applies to a broken wheel on n vertices with r spokes.
    """
    if n < 4 or r < 1 or s < 3:
        raise CBOError("needs n >= 4, r >= 1 and s >= 3")
    return (s - 1) * r >= n - 1


def girth(g: Graph) -> int | None:
    """Number of vertices on a shortest cycle, or None for a forest."""
    adj = g.adjacency()
    best = None
    for root in range(1, g.n + 1):
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best
