from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from cbo import constructions as C
from cbo import families
from cbo.errors import GraphError, ParameterError
from cbo.families import FamilySpec, random_max2deg_trace
from cbo.fixtures import FIXTURES
from cbo.graph import (
    DisjointSet,
    EdgeOrdering,
    identity_ordering,
    make_graph,
    rotate_ordering,
)
from cbo.verify import verify_naive

from conftest import oracle_first_failure


def _labels(lmap, o):
    return [lmap.name_of(e) for e in o]


def _lab(text):
    return [(s[0], int(s[1:])) for s in text.split()]


def test_cycle_identity():
    assert C.cbo_cycle(3) == identity_ordering(3)
    g, _ = families.cycle(12)
    assert oracle_first_failure(g, C.cbo_cycle(12)) is None


def test_square_cycle_7_labels():
    _, lmap = families.square_cycle(7)
    expected = _lab("a1 a2 a3 a4 a5 a6 a7 b1 b3 b2 b5 b4 b7 b6")
    assert _labels(lmap, C.cbo_square_cycle(7)) == expected


def test_square_cycle_6_labels():
    _, lmap = families.square_cycle(6)
    expected = _lab("a1 b4 a2 b5 a3 b6 a4 b1 a5 b2 a6 b3")
    assert _labels(lmap, C.cbo_square_cycle(6)) == expected


def test_wheel_labels():
    _, lmap = families.wheel(6)
    assert _labels(lmap, C.cbo_wheel(6)) == _lab("a1 b3 a2 b4 a3 b5 a4 b1 a5 b2")
    _, lmap = families.wheel(7)
    assert _labels(lmap, C.cbo_wheel(7)) == _lab("a1 b4 a2 b5 a3 b6 a4 b1 a5 b2 a6 b3")


def test_double_wheel_leading_triples():
    for n, head in [(6, "a1 b2 c4"), (7, "a1 c5 b3 a2 c1 b4"), (8, "a1 c5 b3")]:
        _, lmap = families.double_wheel(n)
        labels = _labels(lmap, C.cbo_double_wheel(n))
        assert labels[: len(head.split())] == _lab(head)


def test_one_spoke_8_labels():
    _, lmap = families.broken_wheel_one_spoke(8)
    expected = _lab("a1 b1 a5 b2 a6 b3 a7 b4 a2 b5 a3 b6 a4")
    assert _labels(lmap, C.cbo_broken_wheel_one_spoke(8)) == expected


def test_prism_8_leading_triples():
    _, lmap = families.prism(8)
    assert _labels(lmap, C.cbo_prism(8))[:6] == _lab("a1 b3 c3 a4 b6 c6")


@pytest.mark.parametrize("name", [k for k, fx in FIXTURES.items() if fx.matched_prefix])
def test_constructions_reproduce_drawings(name):
    fx = FIXTURES[name]
    g, o = C.construct(fx.family)
    built = [frozenset(g.edges[e]) for e in o]
    assert built[: fx.matched_prefix] == fx.canonical_sequence()[: fx.matched_prefix]


def test_broken_fan_base_is_c4():
    g, _ = families.broken_fan(2, 2)
    assert [g.edges[e] for e in C.cbo_broken_fan(2, 2)] == [(1, 2), (2, 3), (3, 4), (1, 4)]


def test_broken_fan_new_edge_positions():
    # e_2 = hub v_2, then the path edges v_2 v_3 ... v_{t+1} v_{t+2}
    for t in range(2, 7):
        for r in range(3, 11):
            g, _ = families.broken_fan(t, r)
            pos = C.cbo_broken_fan(t, r).position_map()
            new = [(1, 2)] + [(j, j + 1) for j in range(2, t + 2)]
            for j, e in enumerate(new, start=2):
                assert pos[g.edge_id(*e)] == (j - 2) * (r - 1) + 2
            assert pos[g.edge_id(1, t + 2)] == 1
    g, _ = families.broken_fan(3, 4)
    assert C.cbo_broken_fan(3, 4).position_map()[g.edge_id(4, 5)] == 11 == g.n


def test_splice_is_a_bijection_with_closed_form():
    for gap in range(1, 60):
        for count in range(1, 60 // gap + 2):
            prev = list(range(gap * count + 1))
            new = [f"n{j}" for j in range(count)]
            out = C.splice(prev, new, gap)
            assert sorted(map(str, out)) == sorted(map(str, prev + new))
            assert out[0] == 0
            for j, e in enumerate(new):
                assert out[j * (gap + 1) + 1] == e
            for q in range(2, len(prev) + 1):
                assert out[q + math.ceil((q - 1) / gap) - 1] == q - 1


def test_splice_rejects_mismatched_sizes():
    with pytest.raises(ValueError):
        C.splice([0, 1, 2], ["x"], 1)


def test_tree_path_min_edge_examples():
    path = make_graph(3, [(1, 2), (2, 3)])
    assert C.tree_path_min_edge(path, identity_ordering(2), 2, 1, 3) == 0
    star = make_graph(4, [(1, 2), (1, 3), (1, 4)])
    assert C.tree_path_min_edge(star, EdgeOrdering((2, 1, 0)), 3, 3, 4) == 2
    with pytest.raises(GraphError):
        C.tree_path_min_edge(star, identity_ordering(3), 2, 2, 3)


def test_tree_path_min_edge_separates_endpoints():
    g, _ = families.broken_fan(2, 3)
    o = C.cbo_broken_fan(2, 3)
    x, y = 2, g.n
    prefix = o.positions[: g.n - 1]
    p = C.tree_path_min_edge(g, o, g.n - 1, x, y)
    assert p in prefix
    dsu = DisjointSet(g.n)
    for e in prefix:
        if e != p:
            dsu.union(*g.edges[e])
    assert dsu.find(x) != dsu.find(y)
    pos = o.position_map()
    assert p == min(_tree_path(g, prefix, x, y), key=lambda e: pos[e])


def _tree_path(g, ids, x, y):
    adj = {v: [] for v in range(1, g.n + 1)}
    for e in ids:
        u, v = g.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    stack, via = [x], {x: None}
    while stack:
        u = stack.pop()
        for w, e in adj[u]:
            if w not in via:
                via[w] = (u, e)
                stack.append(w)
    out = []
    while via[y] is not None:
        y, e = via[y]
        out.append(e)
    return out


@given(st.integers(4, 30), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_max2deg_recursion_soundness(n, seed):
    trace = random_max2deg_trace(n, seed)
    g, _ = families.max2deg(trace)
    v, x, y = trace.steps[-1]
    x, y = min(x, y), max(x, y)
    smaller = make_graph(n - 1, [e for e in g.edges if v not in e])
    out = [frozenset(g.edges[e]) for e in C.cbo_max2deg(g)]
    prev = [frozenset(smaller.edges[e]) for e in C.cbo_max2deg(smaller)]
    assert out[1] == {v, x} and out[n - 1] == {v, y}
    rest = [out[0]] + out[2 : n - 1] + out[n:]
    k = prev.index(out[0])
    assert rest == prev[k:] + prev[:k]
    # the anchor is the earliest edge of the x-y path in the leading tree
    path = _tree_path(smaller, C.cbo_max2deg(smaller).positions[: n - 2], x, y)
    pos = C.cbo_max2deg(smaller).position_map()
    anchor = min(path, key=lambda e: pos[e])
    assert frozenset(smaller.edges[anchor]) == out[0]


def test_fan_and_trace_inputs_agree():
    trace = random_max2deg_trace(12, 3)
    g, _ = families.max2deg(trace)
    assert C.cbo_max2deg(trace) == C.cbo_max2deg(g)
    for n in (3, 6, 20):
        g, _ = families.fan(n)
        assert verify_naive(g, C.cbo_fan(n)).is_cbo


def test_w_n_r_cases():
    for n, r in [(8, 3), (5, 3), (6, 4), (10, 8)]:
        g, _ = families.broken_wheel_uniform(n, r)
        assert verify_naive(g, C.cbo_broken_wheel_uniform(n, r)).is_cbo
    g, _ = families.broken_wheel_uniform(7, 6)
    assert verify_naive(g, C.cbo_broken_wheel_uniform(7, 6)).is_cbo


@pytest.mark.parametrize("call", [lambda: C.cbo_prism(6), lambda: C.cbo_prism(2),
                                  lambda: C.cbo_broken_wheel_uniform(9, 4)])
def test_parameter_violations(call):
    with pytest.raises(ParameterError):
        call()


def test_prism_error_names_the_condition():
    with pytest.raises(ParameterError, match=r"n ≡ 2 \(mod 3\)"):
        C.cbo_prism(6)


SPECS = (
    [FamilySpec("square_cycle", {"n": n}) for n in range(5, 13)]
    + [FamilySpec("wheel", {"n": n}) for n in range(4, 13)]
    + [FamilySpec("double_wheel", {"n": n}) for n in range(5, 13)]
    + [FamilySpec("broken_fan", {"t": t, "r": r}) for t in (2, 3) for r in (2, 3, 4)]
    + [FamilySpec("broken_wheel_one_spoke", {"n": n}) for n in range(4, 13)]
    + [FamilySpec("broken_wheel_uniform", {"n": 2 * t + 2, "r": 2}) for t in (1, 2, 3)]
    + [FamilySpec("prism", {"n": n}) for n in (5, 8)]
    + [FamilySpec("max2deg", {"n": n, "seed": n}) for n in range(3, 12)]
)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.header())
def test_constructions_verify_against_window_oracle(spec):
    g, o = C.construct(spec)
    assert sorted(o.positions) == list(range(g.m))
    assert oracle_first_failure(g, o) is None
    assert verify_naive(g, o).is_cbo


def test_rotations_stay_valid():
    rng = random.Random(3)
    for spec in SPECS:
        g, o = C.construct(spec)
        for k in rng.sample(range(g.m), min(4, g.m)):
            assert verify_naive(g, rotate_ordering(o, k)).is_cbo
