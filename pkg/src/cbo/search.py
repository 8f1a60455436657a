"""Exhaustive backtracking search for a cyclic base ordering.

Positions are filled left to right.  Position 1 always holds edge 0 (any
CBO can be rotated to start there), candidates are tried in ascending id,
so the first ordering found is the lexicographically least one.  A partial
ordering is pruned as soon as the placed part of some window contains a
cycle; a full window of n-1 acyclic edges is a spanning tree, so no other
test is needed.

The acyclicity checks use a union-find whose unions are undone after each
check (no path compression, so a rollback only resets the roots it
linked).  The loop is compiled with numba; it keeps an explicit stack of
next candidates instead of recursing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import CBOError
from .graph import EdgeOrdering, Graph, is_connected

DEFAULT_NODE_LIMIT = 10**8

FOUND = "found"
NONE = "none"
INCONCLUSIVE = "inconclusive"

_STATUS = {0: NONE, 1: FOUND, 2: INCONCLUSIVE}


@dataclass(frozen=True)
class SearchResult:
    status: str
    ordering: EdgeOrdering | None = None
    nodes: int = 0

    def __str__(self) -> str:
        if self.status == FOUND:
            return " ".join(map(str, self.ordering.positions))
        return self.status.upper()


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


@njit(cache=True)
def _acyclic(eu, ev, placed, parent, size, linked, a, b, c, d):
    """Whether the placed indices a..b and c..d (inclusive) form a forest."""
    top = 0
    ok = True
    for seg in range(2):
        lo, hi = (a, b) if seg == 0 else (c, d)
        for j in range(lo, hi + 1):
            x = _find(parent, eu[placed[j]])
            y = _find(parent, ev[placed[j]])
            if x == y:
                ok = False
                break
            if size[x] < size[y]:
                x, y = y, x
            parent[y] = x
            size[x] += size[y]
            linked[top] = y
            top += 1
        if not ok:
            break
    while top:
        top -= 1
        y = linked[top]
        size[parent[y]] -= size[y]
        parent[y] = y
    return ok


@njit(cache=True)
def _consistent(eu, ev, placed, parent, size, linked, i, m, k):
    # windows ending at or running through index i, restricted to placed indices
    if not _acyclic(eu, ev, placed, parent, size, linked, max(0, i - k + 1), i, 0, -1):
        return False
    for s in range(max(m - k + 1, i - k + 1, 1), i + 1):
        wrapped = s + k - 1 - m
        if not _acyclic(eu, ev, placed, parent, size, linked, s, i, 0, wrapped):
            return False
    return True


@njit(cache=True)
def _search(eu, ev, n, node_limit, placed):
    """0 = exhausted, 1 = found (in ``placed``), 2 = budget hit; plus nodes."""
    m = eu.shape[0]
    k = n - 1
    parent = np.arange(n + 1)
    size = np.ones(n + 1, dtype=np.int64)
    linked = np.zeros(n + 1, dtype=np.int64)
    used = np.zeros(m, dtype=np.bool_)
    next_candidate = np.zeros(m + 1, dtype=np.int64)
    nodes = 1
    placed[0] = 0
    used[0] = True
    if not _consistent(eu, ev, placed, parent, size, linked, 0, m, k):
        return 0, nodes
    i = 1
    while i >= 1:
        if i == m:
            return 1, nodes
        e = next_candidate[i]
        while e < m and used[e]:
            e += 1
        if e == m:
            i -= 1
            if i >= 1:
                used[placed[i]] = False
            continue
        next_candidate[i] = e + 1
        nodes += 1
        if nodes > node_limit:
            return 2, node_limit
        placed[i] = e
        if _consistent(eu, ev, placed, parent, size, linked, i, m, k):
            used[e] = True
            i += 1
            next_candidate[i] = 0
    return 0, nodes


def find_cbo(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> SearchResult:
    """Depth-first search for a CBO within ``node_limit`` placements."""
    if not is_connected(g):
        raise CBOError("search needs a connected graph")
    m = g.m
    if m < g.n - 1:
        raise CBOError("search needs at least n-1 edges")
    if m == 0:
        return SearchResult(FOUND, EdgeOrdering(()), 0)
    pairs = np.array(g.edges, dtype=np.int64)
    placed = np.zeros(m, dtype=np.int64)
    code, nodes = _search(pairs[:, 0].copy(), pairs[:, 1].copy(), g.n, node_limit, placed)
    status = _STATUS[int(code)]
    ordering = EdgeOrdering(tuple(int(e) for e in placed)) if status == FOUND else None
    return SearchResult(status, ordering, int(nodes))
