"""Decide whether an edge ordering is a cyclic base ordering.

Two engines with the same report contract:

* :func:`verify_naive` rebuilds the adjacency of every window from scratch
  and runs a depth-first search from vertex 1, O(VE) overall.
* :func:`verify_lct` keeps the current window as a link-cut forest and
  slides it one position at a time, amortized O(E log V).

Both report the smallest failing window start.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .graph import (
    GRAPH_DISCONNECTED,
    TOO_FEW_EDGES,
    EdgeOrdering,
    Graph,
    VerifyReport,
    check_ordering,
    is_connected,
    window,
    window_failure_reason,
)
from .linkcut import LinkCutForest


@njit(cache=True)
def _naive_scan(eu, ev, n):
    m = eu.shape[0]
    k = n - 1
    deg = np.zeros(n + 2, dtype=np.int64)
    nbrs = np.zeros(2 * k, dtype=np.int64)
    fill = np.zeros(n + 2, dtype=np.int64)
    visited = np.zeros(n + 1, dtype=np.uint8)
    stack = np.zeros(2 * k + 1, dtype=np.int64)
    for s in range(m):
        # adjacency of the window starting at position s+1, built fresh
        deg[:] = 0
        for i in range(k):
            p = (s + i) % m
            deg[eu[p] + 1] += 1
            deg[ev[p] + 1] += 1
        for v in range(1, n + 2):
            deg[v] += deg[v - 1]
        fill[:] = deg
        for i in range(k):
            p = (s + i) % m
            u, v = eu[p], ev[p]
            nbrs[fill[u]] = v
            fill[u] += 1
            nbrs[fill[v]] = u
            fill[v] += 1
        visited[:] = 0
        stack[0] = 1
        top = 1
        seen = 0
        while top:
            top -= 1
            u = stack[top]
            if visited[u]:
                continue
            visited[u] = 1
            seen += 1
            for j in range(deg[u], deg[u + 1]):
                w = nbrs[j]
                if not visited[w]:
                    stack[top] = w
                    top += 1
        if seen < n:
            return s + 1
    return 0


def _endpoint_arrays(g: Graph, o: EdgeOrdering):
    pairs = np.array([g.edges[e] for e in o.positions], dtype=np.int64).reshape(-1, 2)
    return np.ascontiguousarray(pairs[:, 0]), np.ascontiguousarray(pairs[:, 1])


def _precheck(g: Graph, o: EdgeOrdering) -> VerifyReport | None:
    check_ordering(g, o)
    if g.m < g.n - 1:
        return VerifyReport(False, None, TOO_FEW_EDGES)
    if not is_connected(g):
        return VerifyReport(False, None, GRAPH_DISCONNECTED)
    return None


def _failure(g: Graph, o: EdgeOrdering, start: int) -> VerifyReport:
    ids = window(g, o, start).edge_ids
    return VerifyReport(False, start, window_failure_reason(g, ids))


def verify_naive(g: Graph, o: EdgeOrdering) -> VerifyReport:
    report = _precheck(g, o)
    if report is not None:
        return report
    if g.n == 1:
        return VerifyReport(True)
    start = _naive_scan(*_endpoint_arrays(g, o), g.n)
    return VerifyReport(True) if start == 0 else _failure(g, o, int(start))


def verify_lct(g: Graph, o: EdgeOrdering, forest: LinkCutForest | None = None) -> VerifyReport:
    """Sliding-window check on a link-cut forest.

    ``forest`` may be passed in to inspect its operation counters
    afterwards; it must be fresh and sized to ``g.n``.
    """
    report = _precheck(g, o)
    if report is not None:
        return report
    if g.n == 1:
        return VerifyReport(True)
    if forest is None:
        forest = LinkCutForest(g.n)
    elif forest.n != g.n:
        raise ValueError(f"forest has {forest.n} vertices, graph has {g.n}")
    start = forest.scan_windows(*_endpoint_arrays(g, o))
    return VerifyReport(True) if start == 0 else _failure(g, o, start)


ENGINES = {"naive": verify_naive, "lct": verify_lct}


def verify(g: Graph, o: EdgeOrdering, engine: str = "lct") -> VerifyReport:
    try:
        fn = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {sorted(ENGINES)}") from None
    return fn(g, o)
