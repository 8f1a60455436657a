"""Generators for the graph families that carry cyclic base orderings.

Every generator returns the graph together with a :class:`LabeledEdgeMap`
naming its edges the way the constructions refer to them (``a_i``,
``b_i``, ``c_i``).  Vertex layout per family:

=========================  ==============================================
cycle                      v_i -> i; b_i = v_i v_{i+1}
square_cycle               v_i -> i; a_i = v_i v_{i+2}, b_i = v_i v_{i+1}
wheel                      rim v_1..v_{n-1}, hub v_n; a_i spoke, b_i rim
double_wheel               rim v_1..v_{n-2} -> 1..n-2, hub v_{n-1} -> n-1,
                           hub v_0 -> n; a_i = v_i v_0, c_i = v_i v_{n-1}
fan, broken_fan            hub 1, path 2..n; a_i spokes, b_i path edges
broken_wheel_one_spoke     rim v_1..v_{n-1}, hub v_0 -> n; a_i rim,
                           b_i = v_0 v_{i+1} (no spoke at v_1)
broken_wheel_uniform       rim v_1..v_{n-1}, hub v_0 -> n; a_i rim,
                           b_i the i-th spoke
prism                      outer v_i -> i, inner u_i -> n+i; a_i outer,
                           b_i = v_i u_i, c_i inner
max2deg                    base edge a_1 = 12; step i adds v = i+2 with
                           b_i = v x and c_i = v y
=========================  ==============================================

Indices of a class wrap around its period (``a_{n+1}`` is ``a_1``).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Callable

from .errors import NotMaximal2DegenerateError, ParameterError
from .graph import Graph, make_graph

FAMILIES = (
    "cycle",
    "square_cycle",
    "wheel",
    "double_wheel",
    "fan",
    "broken_fan",
    "broken_wheel_one_spoke",
    "broken_wheel_uniform",
    "prism",
    "max2deg",
)


class LabeledEdgeMap:
    """Symbolic edge names ``(class, index)`` to edge ids."""

    def __init__(self, classes: dict[str, list[int]]):
        self.classes = {name: list(ids) for name, ids in classes.items()}

    def period(self, name: str) -> int:
        return len(self.classes[name])

    def __getitem__(self, key: tuple[str, int]) -> int:
        name, i = key
        ids = self.classes[name]
        return ids[(i - 1) % len(ids)]

    def __call__(self, name: str, i: int) -> int:
        return self[name, i]

    def items(self):
        for name, ids in self.classes.items():
            for i, e in enumerate(ids, start=1):
                yield (name, i), e

    def name_of(self, edge_id: int) -> tuple[str, int]:
        for key, e in self.items():
            if e == edge_id:
                return key
        raise KeyError(edge_id)


@dataclass(frozen=True)
class Max2DegTrace:
    """Construction sequence of a maximal 2-degenerate graph.

    Starts from the edge 12; step ``(v, x, y)`` adds vertex v joined to the
    existing vertices x and y, with v running 3, 4, ...
    """

    steps: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        steps = tuple(tuple(int(a) for a in s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        for expected, (v, x, y) in enumerate(steps, start=3):
            if v != expected:
                raise ParameterError(f"trace step adds vertex {v}, expected {expected}")
            if x == y or not (1 <= x < v and 1 <= y < v):
                raise ParameterError(
                    f"vertex {v} must join two distinct earlier vertices, got {x}, {y}"
                )

    @property
    def n(self) -> int:
        return len(self.steps) + 2


def random_max2deg_trace(n: int, seed: int) -> Max2DegTrace:
    """Each new vertex joins two distinct existing vertices chosen uniformly."""
    if n < 3:
        raise ParameterError("a maximal 2-degenerate trace needs n >= 3")
    rng = random.Random(seed)
    steps = []
    for v in range(3, n + 1):
        x, y = rng.sample(range(1, v), 2)
        steps.append((v, x, y))
    return Max2DegTrace(tuple(steps))


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def header(self) -> str:
        """One-line description embedded as a comment in graph files."""
        parts = [f"family={self.family}"]
        for key in sorted(self.params):
            value = self.params[key]
            if isinstance(value, Max2DegTrace):
                value = ";".join(f"{v}:{x},{y}" for v, x, y in value.steps)
            parts.append(f"{key}={value}")
        return " ".join(parts)

    @classmethod
    def from_header(cls, line: str) -> FamilySpec:
        fields = dict(part.split("=", 1) for part in line.split())
        family = fields.pop("family")
        params: dict = {}
        for key, value in fields.items():
            if key == "trace":
                steps = []
                for item in filter(None, value.split(";")):
                    v, rest = item.split(":")
                    x, y = rest.split(",")
                    steps.append((int(v), int(x), int(y)))
                params[key] = Max2DegTrace(tuple(steps))
            else:
                params[key] = int(value)
        return cls(family, params)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def _ring(n: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(offset + i, offset + i % n + 1) for i in range(1, n + 1)]


def _build(n: int, classes: dict[str, list[tuple[int, int]]]):
    edges: list[tuple[int, int]] = []
    ids: dict[str, list[int]] = {}
    for name, pairs in classes.items():
        ids[name] = list(range(len(edges), len(edges) + len(pairs)))
        edges.extend(pairs)
    return make_graph(n, edges), LabeledEdgeMap(ids)


def cycle(n: int):
    _require(n >= 3, "cycle requires n >= 3")
    return _build(n, {"b": _ring(n)})


def square_cycle(n: int):
    # n = 4 would make a_1 and a_3 the same chord
    _require(n >= 5, "square of a cycle requires n >= 5")
    chords = [(i, (i + 1) % n + 1) for i in range(1, n + 1)]
    return _build(n, {"a": chords, "b": _ring(n)})


def wheel(n: int):
    _require(n >= 4, "wheel requires n >= 4")
    spokes = [(i, n) for i in range(1, n)]
    return _build(n, {"a": spokes, "b": _ring(n - 1)})


def double_wheel(n: int):
    _require(n >= 5, "double wheel requires n >= 5")
    rim = n - 2
    return _build(
        n,
        {
            "a": [(i, n) for i in range(1, rim + 1)],
            "b": _ring(rim),
            "c": [(i, n - 1) for i in range(1, rim + 1)],
        },
    )


def fan(n: int):
    _require(n >= 3, "fan requires n >= 3")
    return _build(
        n,
        {
            "a": [(1, j) for j in range(2, n + 1)],
            "b": [(j, j + 1) for j in range(2, n)],
        },
    )


def broken_fan(t: int, r: int):
    """F_n(t) with r spokes, one every t path vertices; n = (r-1)t + 2."""
    _require(t >= 2, "broken fan requires t >= 2")
    _require(r >= 2, "broken fan requires r >= 2 spokes")
    n = (r - 1) * t + 2
    return _build(
        n,
        {
            "a": [(1, 2 + i * t) for i in range(r)],
            "b": [(j, j + 1) for j in range(2, n)],
        },
    )


def broken_wheel_one_spoke(n: int):
    _require(n >= 4, "broken wheel missing one spoke requires n >= 4")
    return _build(
        n,
        {
            "a": _ring(n - 1),
            "b": [(n, i + 1) for i in range(1, n - 1)],
        },
    )


def uniform_spoke_positions(n: int, r: int) -> list[int]:
    """Rim vertices floor((n-1)i/r) + 1 for i = 0..r-1 carrying the spokes."""
    return [(n - 1) * i // r + 1 for i in range(r)]


def broken_wheel_uniform(n: int, r: int):
    _require(n >= 4, "broken wheel W(n, r) requires n >= 4")
    _require(n - 1 >= r >= 2, "broken wheel W(n, r) requires n-1 >= r >= 2")
    return _build(
        n,
        {
            "a": _ring(n - 1),
            "b": [(n, k) for k in uniform_spoke_positions(n, r)],
        },
    )


def prism(n: int):
    _require(n >= 3, "prism requires n >= 3")
    return _build(
        2 * n,
        {
            "a": _ring(n),
            "b": [(i, n + i) for i in range(1, n + 1)],
            "c": _ring(n, offset=n),
        },
    )


def max2deg(trace: Max2DegTrace):
    _require(trace.n >= 3, "maximal 2-degenerate graph requires n >= 3")
    return _build(
        trace.n,
        {
            "a": [(1, 2)],
            "b": [(v, x) for v, x, _ in trace.steps],
            "c": [(v, y) for v, _, y in trace.steps],
        },
    )


_GENERATORS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "cycle": (cycle, ("n",)),
    "square_cycle": (square_cycle, ("n",)),
    "wheel": (wheel, ("n",)),
    "double_wheel": (double_wheel, ("n",)),
    "fan": (fan, ("n",)),
    "broken_fan": (broken_fan, ("t", "r")),
    "broken_wheel_one_spoke": (broken_wheel_one_spoke, ("n",)),
    "broken_wheel_uniform": (broken_wheel_uniform, ("n", "r")),
    "prism": (prism, ("n",)),
}


def family_parameters(family: str) -> tuple[str, ...]:
    if family == "max2deg":
        return ("n", "seed")
    try:
        return _GENERATORS[family][1]
    except KeyError:
        raise ParameterError(f"unknown family {family!r}") from None


def resolve_trace(spec: FamilySpec) -> Max2DegTrace:
    params = spec.params
    if "trace" in params:
        return params["trace"]
    missing = [k for k in ("n", "seed") if k not in params]
    _require(not missing, "max2deg needs a trace or both n and seed")
    return random_max2deg_trace(params["n"], params["seed"])


def generate(spec: FamilySpec) -> tuple[Graph, LabeledEdgeMap]:
    if spec.family == "max2deg":
        return max2deg(resolve_trace(spec))
    names = family_parameters(spec.family)
    fn = _GENERATORS[spec.family][0]
    missing = [k for k in names if k not in spec.params]
    _require(not missing, f"{spec.family} needs parameter(s) {', '.join(missing)}")
    extra = sorted(set(spec.params) - set(names))
    _require(not extra, f"{spec.family} does not take parameter(s) {', '.join(extra)}")
    return fn(*(int(spec.params[k]) for k in names))


def max2deg_elimination(g: Graph) -> tuple[tuple[int, int], list[tuple[int, int, int]]]:
    """Recover how g was built from an edge by adding degree-2 vertices.

    Returns the base edge and the steps ``(v, x, y)`` in construction
    order.  Raises NotMaximal2DegenerateError when no such sequence exists.
    """
    n = g.n
    if n < 2 or g.m != 2 * n - 3:
        raise NotMaximal2DegenerateError(
            f"a maximal 2-degenerate graph on {n} vertices has {2 * n - 3} edges, got {g.m}"
        )
    adj = [set(nb) for nb in g.adjacency()]
    alive = set(range(1, n + 1))
    heap = [-v for v in alive if len(adj[v]) == 2]
    heapq.heapify(heap)
    peeled: list[tuple[int, int, int]] = []
    while len(alive) > 2:
        while heap and (-heap[0] not in alive or len(adj[-heap[0]]) != 2):
            heapq.heappop(heap)
        if not heap:
            raise NotMaximal2DegenerateError("no vertex of degree 2 left to eliminate")
        v = -heapq.heappop(heap)
        x, y = sorted(adj[v])
        peeled.append((v, x, y))
        alive.discard(v)
        for w in (x, y):
            adj[w].discard(v)
            if len(adj[w]) == 2:
                heapq.heappush(heap, -w)
        adj[v].clear()
    u, w = sorted(alive)
    if w not in adj[u]:
        raise NotMaximal2DegenerateError("the last two vertices are not adjacent")
    return (u, w), peeled[::-1]
