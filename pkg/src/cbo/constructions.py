"""Explicit cyclic base orderings for the supported graph families.

Each ``cbo_*`` function returns an :class:`EdgeOrdering` of the canonical
graph produced by the matching generator in :mod:`cbo.families`.  The
recursive constructions (broken fans, W(n, r), maximal 2-degenerate
graphs) all grow an ordering of a smaller graph with the same splice: the
anchor edge stays at position 1, the new edges are dropped in every
``gap + 1`` positions starting at 2, and the old edge at position q moves
to ``q + ceil((q - 1) / gap)``.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from . import families
from .errors import GraphError, ParameterError
from .families import FamilySpec, Max2DegTrace
from .graph import EdgeOrdering, Graph, check_ordering, ordering_from_edges

Pair = tuple[int, int]


def _labels(lmap, labels) -> EdgeOrdering:
    return EdgeOrdering(tuple(lmap[name, i] for name, i in labels))


def splice(prev: Sequence, new: Sequence, gap: int) -> list:
    """Interleave ``new`` into ``prev`` keeping ``prev[0]`` first.

    ``prev`` must already be rotated so its anchor is at index 0 and must
    satisfy ``len(prev) - 1 == gap * len(new)``.
    """
    if gap < 1 or len(prev) - 1 != gap * len(new):
        raise ValueError(f"cannot splice {len(new)} edges into {len(prev)} with gap {gap}")
    out: list = [None] * (len(prev) + len(new))
    out[0] = prev[0]
    for j, e in enumerate(new):
        out[1 + j * (gap + 1)] = e
    for q in range(2, len(prev) + 1):
        out[q - 1 + -(-(q - 1) // gap)] = prev[q - 1]
    assert all(e is not None for e in out)
    return out


def _rotate_to(seq: list, item) -> list:
    k = seq.index(item)
    return seq[k:] + seq[:k]


def _path_min_index(pairs: Sequence[Pair], x: int, y: int) -> int:
    """Index of the earliest edge on the x-y path of the tree ``pairs``."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for i, (u, v) in enumerate(pairs):
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    if len(adj) != len(pairs) + 1:
        raise GraphError("prefix is not a spanning tree")
    via: dict[int, tuple[int, int] | None] = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w, i in adj.get(u, ()):
            if w not in via:
                via[w] = (u, i)
                queue.append(w)
    if len(via) != len(adj):
        raise GraphError("prefix is not a spanning tree")
    if y not in via:
        raise GraphError(f"vertex {y} is not covered by the prefix tree")
    best = None
    w = y
    while via[w] is not None:
        w, i = via[w]
        best = i if best is None else min(best, i)
    if best is None:
        raise GraphError("x and y coincide; the path is empty")
    return best


def tree_path_min_edge(g: Graph, o: EdgeOrdering, prefix_len: int, x: int, y: int) -> int:
    """Edge with the smallest position on the x-y path of the prefix tree.

    The first ``prefix_len`` positions of ``o`` must form a spanning tree of
    ``g``.  Removing the returned edge separates x from y in that tree.
    """
    check_ordering(g, o)
    if prefix_len != g.n - 1:
        raise GraphError(f"a spanning tree of {g.n} vertices has {g.n - 1} edges")
    prefix = o.positions[:prefix_len]
    if len(set(prefix)) != prefix_len:
        raise GraphError("prefix repeats an edge")
    i = _path_min_index([g.edges[e] for e in prefix], x, y)
    return prefix[i]


# -- direct constructions -----------------------------------------------------


def cbo_cycle(n: int) -> EdgeOrdering:
    _, lmap = families.cycle(n)
    return _labels(lmap, [("b", i) for i in range(1, n + 1)])


def cbo_square_cycle(n: int) -> EdgeOrdering:
    _, lmap = families.square_cycle(n)
    if n % 2:
        k = n // 2
        labels = [("a", i) for i in range(1, n + 1)] + [("b", 1)]
        for j in range(1, k + 1):
            labels += [("b", 2 * j + 1), ("b", 2 * j)]
    else:
        k = n // 2
        labels = []
        for i in range(1, n + 1):
            labels += [("a", i), ("b", k + i)]
    return _labels(lmap, labels)


def cbo_wheel(n: int) -> EdgeOrdering:
    _, lmap = families.wheel(n)
    k = n // 2
    shift = k - 1 if n % 2 == 0 else k
    labels = []
    for i in range(1, n):
        labels += [("a", i), ("b", shift + i)]
    return _labels(lmap, labels)


def cbo_double_wheel(n: int) -> EdgeOrdering:
    _, lmap = families.double_wheel(n)
    k = n // 3
    labels = []
    for t in range(1, n - 1):
        if n % 3 == 0:
            labels += [("a", t), ("b", t + k - 1), ("c", t + 2 * k - 1)]
        else:
            labels += [("a", t), ("c", t + 2 * k), ("b", t + k)]
    return _labels(lmap, labels)


def cbo_broken_wheel_one_spoke(n: int) -> EdgeOrdering:
    _, lmap = families.broken_wheel_one_spoke(n)
    if n % 2 == 0:
        h = n // 2
        labels = [("a", 1), ("b", 1)]
        for i in range(1, h - 1):
            labels += [("a", h + i), ("b", i + 1)]
        labels.append(("a", n - 1))
        for i in range(1, h):
            labels += [("b", h - 1 + i), ("a", i + 1)]
    else:
        h = (n - 1) // 2
        labels = []
        for i in range(1, h + 1):
            labels += [("a", h + i), ("b", i)]
        for i in range(1, h):
            labels += [("b", h + i), ("a", i + 1)]
        labels.append(("a", 1))
    return _labels(lmap, labels)


def cbo_prism(n: int) -> EdgeOrdering:
    if n < 5 or n % 3 != 2:
        raise ParameterError("prism requires n ≡ 2 (mod 3) with n >= 5")
    _, lmap = families.prism(n)
    labels = []
    for i in range(n):
        labels += [("a", 3 * i + 1), ("b", 3 * i + 3), ("c", 3 * i + 3)]
    return _labels(lmap, labels)


# -- recursive constructions --------------------------------------------------


def _broken_fan_pairs(t: int, r: int) -> list[Pair]:
    """Edge sequence of a CBO of F_n(t) in the canonical labelling."""
    # r = 2: the cycle hub, 2, ..., t+2; starting with the spoke to vertex 2
    seq = [(1, 2)] + [(j, j + 1) for j in range(2, t + 2)] + [(1, t + 2)]
    for spokes in range(3, r + 1):
        # the previous graph becomes G - {v_2..v_{t+1}}: shift path vertices by t
        seq = [tuple(w if w == 1 else w + t for w in e) for e in seq]
        seq = _rotate_to(seq, (1, t + 2))
        new = [(1, 2)] + [(j - 1, j) for j in range(3, t + 3)]
        seq = splice(seq, new, spokes - 2)
    return seq


def cbo_broken_fan(t: int, r: int) -> EdgeOrdering:
    g, _ = families.broken_fan(t, r)
    return ordering_from_edges(g, _broken_fan_pairs(t, r))


def _max2deg_sequence(g: Graph) -> list[int]:
    base, steps = families.max2deg_elimination(g)
    if not steps:
        raise ParameterError("maximal 2-degenerate construction requires n >= 3")
    v, x, y = steps[0]
    seq = sorted([g.edge_id(*base), g.edge_id(v, x), g.edge_id(v, y)])
    for n, (v, x, y) in enumerate(steps[1:], start=4):
        x, y = min(x, y), max(x, y)
        tree = [g.edges[e] for e in seq[: n - 2]]
        p = seq[_path_min_index(tree, x, y)]
        seq = splice(_rotate_to(seq, p), [g.edge_id(v, x), g.edge_id(v, y)], n - 3)
    return seq


def cbo_max2deg(graph_or_trace: Graph | Max2DegTrace) -> EdgeOrdering:
    """CBO of a maximal 2-degenerate graph, grown one degree-2 vertex at a time.

    A trace is turned into its canonical graph first.  At each step the new
    vertex v with neighbours x < y takes the place of the earliest edge p on
    the x-y path of the current leading spanning tree: p moves to position
    1, vx to 2 and vy to n.
    """
    g = graph_or_trace
    if isinstance(g, Max2DegTrace):
        g, _ = families.max2deg(g)
    return EdgeOrdering(tuple(_max2deg_sequence(g)))


def cbo_fan(n: int) -> EdgeOrdering:
    g, _ = families.fan(n)
    return cbo_max2deg(g)


def _fan_pairs(n: int) -> list[Pair]:
    g, _ = families.fan(n)
    return [g.edges[e] for e in cbo_fan(n)]


def cbo_broken_wheel_uniform(n: int, r: int) -> EdgeOrdering:
    g, _ = families.broken_wheel_uniform(n, r)
    if r == n - 1:
        wheel, _ = families.wheel(n)
        return ordering_from_edges(g, (wheel.edges[e] for e in cbo_wheel(n)))
    if (n - 2) % r:
        raise ParameterError("broken wheel W(n, r) construction requires n = rt + 2")
    t = (n - 2) // r
    inner = _fan_pairs(r + 1) if t == 1 else _broken_fan_pairs(t, r)

    # fan hub 1 -> wheel hub n, fan path vertex p -> rim vertex p - 1
    def relabel(w: int) -> int:
        return n if w == 1 else w - 1

    prev = [(relabel(u), relabel(v)) for u, v in inner]
    x, y = (r - 1) * t + 1, 1
    gap_vertices = list(range(x + 1, n))
    p = prev[_path_min_index(prev[: n - t - 1], x, y)]
    path = [x] + gap_vertices + [y]
    new = list(zip(path, path[1:]))
    return ordering_from_edges(g, splice(_rotate_to(prev, p), new, r - 1))


_CONSTRUCTIONS = {
    "cycle": cbo_cycle,
    "square_cycle": cbo_square_cycle,
    "wheel": cbo_wheel,
    "double_wheel": cbo_double_wheel,
    "fan": cbo_fan,
    "broken_fan": cbo_broken_fan,
    "broken_wheel_one_spoke": cbo_broken_wheel_one_spoke,
    "broken_wheel_uniform": cbo_broken_wheel_uniform,
    "prism": cbo_prism,
}


def construct(spec: FamilySpec) -> tuple[Graph, EdgeOrdering]:
    """Generate the family graph and its constructed CBO."""
    g, _ = families.generate(spec)
    if spec.family == "max2deg":
        return g, cbo_max2deg(g)
    fn = _CONSTRUCTIONS[spec.family]
    args = [int(spec.params[k]) for k in families.family_parameters(spec.family)]
    return g, fn(*args)
