"""Link-cut trees over vertices 1..n.

The forest is stored in flat arrays (``left``, ``right``, ``parent``,
``flip``); 0 is the null node.  Preferred paths are splay trees keyed by
depth; ``flip`` is the lazy reversal used by make-root, which lets
``link`` join arbitrary vertices of two trees and ``cut`` remove an edge
given only its endpoints.  All kernels are compiled with numba and take
the arrays explicitly so the sliding-window scan can run without
returning to the interpreter.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import CBOError


@njit(cache=True, inline="always")
def _is_splay_root(L, R, P, x):
    p = P[x]
    return p == 0 or (L[p] != x and R[p] != x)


@njit(cache=True)
def _push(L, R, F, x):
    if F[x]:
        a = L[x]
        L[x] = R[x]
        R[x] = a
        if L[x]:
            F[L[x]] ^= 1
        if R[x]:
            F[R[x]] ^= 1
        F[x] = 0


@njit(cache=True)
def _rotate(L, R, P, x):
    p = P[x]
    g = P[p]
    if not _is_splay_root(L, R, P, p):
        if L[g] == p:
            L[g] = x
        else:
            R[g] = x
    P[x] = g
    if L[p] == x:
        b = R[x]
        L[p] = b
        R[x] = p
    else:
        b = L[x]
        R[p] = b
        L[x] = p
    if b:
        P[b] = p
    P[p] = x


@njit(cache=True)
def _splay(L, R, P, F, stack, x):
    top = 0
    y = x
    stack[top] = y
    top += 1
    while not _is_splay_root(L, R, P, y):
        y = P[y]
        stack[top] = y
        top += 1
    while top:
        top -= 1
        _push(L, R, F, stack[top])
    while not _is_splay_root(L, R, P, x):
        p = P[x]
        if not _is_splay_root(L, R, P, p):
            g = P[p]
            if (L[g] == p) == (L[p] == x):
                _rotate(L, R, P, p)
            else:
                _rotate(L, R, P, x)
        _rotate(L, R, P, x)


@njit(cache=True)
def _access(L, R, P, F, stack, x):
    last = 0
    y = x
    while y:
        _splay(L, R, P, F, stack, y)
        R[y] = last
        last = y
        y = P[y]
    _splay(L, R, P, F, stack, x)


@njit(cache=True)
def _make_root(L, R, P, F, stack, x):
    _access(L, R, P, F, stack, x)
    F[x] ^= 1


@njit(cache=True)
def _find_root(L, R, P, F, stack, x):
    _access(L, R, P, F, stack, x)
    y = x
    _push(L, R, F, y)
    while L[y]:
        y = L[y]
        _push(L, R, F, y)
    _splay(L, R, P, F, stack, y)
    return y


@njit(cache=True)
def _connected(L, R, P, F, stack, u, v):
    if u == v:
        return True
    return _find_root(L, R, P, F, stack, u) == _find_root(L, R, P, F, stack, v)


@njit(cache=True)
def _link(L, R, P, F, stack, u, v):
    """Add edge uv; False (and no change) if u and v share a tree."""
    if u == v:
        return False
    _make_root(L, R, P, F, stack, u)
    if _find_root(L, R, P, F, stack, v) == u:
        return False
    # find_root(v) only touched v's tree: u is still a tree root and splay root
    P[u] = v
    return True


@njit(cache=True)
def _cut(L, R, P, F, stack, u, v):
    """Remove edge uv; False (and no change) if it is not in the forest."""
    if u == v:
        return False
    _make_root(L, R, P, F, stack, u)
    _access(L, R, P, F, stack, v)
    if L[v] != u or L[u] != 0 or R[u] != 0:
        return False
    L[v] = 0
    P[u] = 0
    return True


@njit(cache=True)
def _sliding_scan(eu, ev, n, L, R, P, F, stack, counts):
    """Certify every window of n-1 cyclically consecutive edges.

    ``eu``/``ev`` hold the endpoints position by position.  Returns the
    first failing 1-based window start, or 0 if every window is a spanning
    tree.  ``counts`` accumulates (links, cuts, connectivity queries).
    """
    m = eu.shape[0]
    k = n - 1
    for p in range(k):
        counts[2] += 1
        if _connected(L, R, P, F, stack, eu[p], ev[p]):
            # positions 1..p+1 already close a cycle, so window 1 fails
            return 1
        _link(L, R, P, F, stack, eu[p], ev[p])
        counts[0] += 1
    for i in range(m - 1):
        _cut(L, R, P, F, stack, eu[i], ev[i])
        counts[1] += 1
        j = (i + k) % m
        counts[2] += 1
        if _connected(L, R, P, F, stack, eu[j], ev[j]):
            return i + 2
        _link(L, R, P, F, stack, eu[j], ev[j])
        counts[0] += 1
    return 0


class ForestError(CBOError):
    """A link inside one tree, or a cut of an edge that is not present."""


class LinkCutForest:
    """Dynamic forest on vertices 1..n with link, cut and connectivity.

    Single-owner mutable state; ``ops`` counts successful links and cuts
    plus connectivity queries.
    """

    def __init__(self, n: int):
        self.n = n
        size = n + 1
        self.left = np.zeros(size, dtype=np.int64)
        self.right = np.zeros(size, dtype=np.int64)
        self.parent = np.zeros(size, dtype=np.int64)
        self.flip = np.zeros(size, dtype=np.uint8)
        self.stack = np.zeros(size, dtype=np.int64)
        self.ops = {"link": 0, "cut": 0, "connected": 0}

    def _arrays(self):
        return self.left, self.right, self.parent, self.flip, self.stack

    def _check(self, *vertices: int) -> None:
        for v in vertices:
            if not 1 <= v <= self.n:
                raise ForestError(f"vertex {v} outside 1..{self.n}")

    def connected(self, u: int, v: int) -> bool:
        self._check(u, v)
        self.ops["connected"] += 1
        return bool(_connected(*self._arrays(), u, v))

    def find_root(self, v: int) -> int:
        self._check(v)
        return int(_find_root(*self._arrays(), v))

    def link(self, u: int, v: int) -> None:
        self._check(u, v)
        if not _link(*self._arrays(), u, v):
            raise ForestError(f"{u} and {v} are already in the same tree")
        self.ops["link"] += 1

    def cut(self, u: int, v: int) -> None:
        self._check(u, v)
        if not _cut(*self._arrays(), u, v):
            raise ForestError(f"edge ({u}, {v}) is not in the forest")
        self.ops["cut"] += 1

    def scan_windows(self, eu: np.ndarray, ev: np.ndarray) -> int:
        """Run the sliding-window certification on a fresh forest.

        Returns the first failing window start (1-based) or 0.
        """
        counts = np.zeros(3, dtype=np.int64)
        result = _sliding_scan(eu, ev, self.n, *self._arrays(), counts)
        self.ops["link"] += int(counts[0])
        self.ops["cut"] += int(counts[1])
        self.ops["connected"] += int(counts[2])
        return int(result)


# module-level helpers with the names used elsewhere in the package
def lct_link(f: LinkCutForest, u: int, v: int) -> None:
    f.link(u, v)


def lct_cut(f: LinkCutForest, u: int, v: int) -> None:
    f.cut(u, v)


def lct_connected(f: LinkCutForest, u: int, v: int) -> bool:
    return f.connected(u, v)
