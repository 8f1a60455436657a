"""Graphs, edge orderings, progressions and their text formats.

Vertices are 1-based.  An edge is identified by its position in the
graph's edge list (0-based) so that an ordering survives a round trip
through the text formats unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FormatError, GraphError, OrderingError

Edge = tuple[int, int]

CYCLE_IN_WINDOW = "cycle-in-window"
WINDOW_DISCONNECTED = "window-disconnected"
GRAPH_DISCONNECTED = "graph-disconnected"
TOO_FEW_EDGES = "too-few-edges"
WINDOW_REASONS = (CYCLE_IN_WINDOW, WINDOW_DISCONNECTED)


class DisjointSet:
    """Union-find over 1..n with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Join the sets of x and y; False if they were already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.components -= 1
        return True


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    _index: dict[frozenset, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: dict[frozenset, int] = {}
        for i, (u, v) in enumerate(self.edges):
            index[frozenset((u, v))] = i
        object.__setattr__(self, "_index", index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge joining u and v; KeyError if absent."""
        return self._index[frozenset((u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._index

    def degrees(self) -> list[int]:
        """Degree of every vertex; index 0 is unused."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    @cached_property
    def connected(self) -> bool:
        dsu = DisjointSet(self.n)
        for u, v in self.edges:
            dsu.union(u, v)
        return dsu.components == 1

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on vertices 1..n; edge ids follow input order."""
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    checked: list[Edge] = []
    seen: set[frozenset] = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 1..{n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        checked.append((u, v))
    return Graph(n, tuple(checked))


def is_connected(g: Graph) -> bool:
    return g.connected


@dataclass(frozen=True)
class EdgeOrdering:
    """Cyclic edge ordering; position p (1-based) holds ``positions[p-1]``."""

    positions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(int(e) for e in self.positions))
        if sorted(self.positions) != list(range(len(self.positions))):
            raise OrderingError("ordering is not a permutation of 0..m-1")

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def at(self, p: int) -> int:
        """Edge id at 1-based position p, taken cyclically."""
        return self.positions[(p - 1) % len(self.positions)]

    def position_map(self) -> list[int]:
        """Inverse map: ``result[edge_id]`` is that edge's 1-based position."""
        inv = [0] * len(self.positions)
        for p, e in enumerate(self.positions, start=1):
            inv[e] = p
        return inv


def identity_ordering(m: int) -> EdgeOrdering:
    return EdgeOrdering(tuple(range(m)))


def ordering_from_edges(g: Graph, pairs: Iterable[Sequence[int]]) -> EdgeOrdering:
    """Ordering listing the given endpoint pairs position by position."""
    return EdgeOrdering(tuple(g.edge_id(u, v) for u, v in pairs))


def check_ordering(g: Graph, o: EdgeOrdering) -> None:
    if len(o) != g.m:
        raise OrderingError(f"ordering has {len(o)} positions but the graph has {g.m} edges")


@dataclass(frozen=True)
class Progression:
    start: int
    edge_ids: tuple[int, ...]


def window(g: Graph, o: EdgeOrdering, start: int) -> Progression:
    """The n-1 edges at cyclic positions start, ..., start+n-2."""
    check_ordering(g, o)
    m, k = g.m, g.n - 1
    if m < k:
        raise GraphError(f"{TOO_FEW_EDGES}: {m} edges cannot fill a window of {k}")
    if not 1 <= start <= m:
        raise ValueError(f"start must lie in 1..{m}, got {start}")
    return Progression(start, tuple(o.at(start + i) for i in range(k)))


def rotate_ordering(o: EdgeOrdering, k: int) -> EdgeOrdering:
    """Shift so that the new position 1 holds the old position k+1."""
    if not o.positions:
        return o
    k %= len(o.positions)
    return EdgeOrdering(o.positions[k:] + o.positions[:k])


def reverse_ordering(o: EdgeOrdering) -> EdgeOrdering:
    return EdgeOrdering(o.positions[::-1])


def is_spanning_tree(g: Graph, edge_ids: Iterable[int]) -> bool:
    ids = list(edge_ids)
    for e in ids:
        if not 0 <= e < g.m:
            raise GraphError(f"edge id {e} outside 0..{g.m - 1}")
    if len(set(ids)) != len(ids) or len(ids) != g.n - 1:
        return False
    dsu = DisjointSet(g.n)
    for e in ids:
        u, v = g.edges[e]
        if not dsu.union(u, v):
            return False
    return dsu.components == 1


def has_cycle(g: Graph, edge_ids: Iterable[int]) -> bool:
    dsu = DisjointSet(g.n)
    for e in edge_ids:
        u, v = g.edges[e]
        if not dsu.union(u, v):
            return True
    return False


def window_failure_reason(g: Graph, edge_ids: Iterable[int]) -> str:
    """Why a non-spanning window fails.

    With exactly n-1 distinct edges a cycle and a disconnection always come
    together; the cycle is reported.
    """
    return CYCLE_IN_WINDOW if has_cycle(g, edge_ids) else WINDOW_DISCONNECTED


@dataclass(frozen=True)
class VerifyReport:
    is_cbo: bool
    failing_start: int | None = None
    reason: str | None = None

    def __str__(self) -> str:
        if self.is_cbo:
            return "CBO"
        start = "none" if self.failing_start is None else self.failing_start
        return f"NOT-CBO start={start} reason={self.reason}"


# -- text formats -----------------------------------------------------------


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_comments(text: str) -> list[str]:
    """The ``#`` comment lines of a graph file, without the marker."""
    return [
        line.strip()[1:].strip()
        for line in text.splitlines()
        if line.strip().startswith("#")
    ]


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("missing 'n m' header line") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"expected 'n m', got {header!r}", lineno)
    n, m = int(parts[0]), int(parts[1])
    if n < 1:
        raise FormatError("vertex count must be positive", lineno)
    edges = []
    seen: set[frozenset] = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if len(edges) == m:
            raise FormatError(f"more than the declared {m} edges", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"vertex outside 1..{n}", lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        if frozenset((u, v)) in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(frozenset((u, v)))
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"declared {m} edges but found {len(edges)}")
    return make_graph(n, edges)


def format_ordering(o: EdgeOrdering) -> str:
    return "".join(f"{e}\n" for e in o.positions)


def parse_ordering(text: str) -> EdgeOrdering:
    ids = []
    for lineno, line in _data_lines(text):
        if not line.isdigit():
            raise FormatError(f"expected an edge id, got {line!r}", lineno)
        ids.append(int(line))
    try:
        return EdgeOrdering(tuple(ids))
    except OrderingError as exc:
        raise FormatError(str(exc)) from None


def export_dot(g: Graph, o: EdgeOrdering | None = None, name: str = "G") -> str:
    """Graphviz text; with an ordering each edge is labelled by its position."""
    pos = None
    if o is not None:
        check_ordering(g, o)
        pos = o.position_map()
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(1, g.n + 1))
    for e, (u, v) in enumerate(g.edges):
        if pos is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{pos[e]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
