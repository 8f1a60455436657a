from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from cbo.errors import FormatError, GraphError, OrderingError
from cbo.graph import (
    EdgeOrdering,
    VerifyReport,
    export_dot,
    format_graph,
    format_ordering,
    graph_comments,
    identity_ordering,
    is_spanning_tree,
    make_graph,
    parse_graph,
    parse_ordering,
    reverse_ordering,
    rotate_ordering,
    window,
)

from conftest import oracle_spanning_tree, random_connected_graph

C4 = [(1, 2), (2, 3), (3, 4), (4, 1)]


def test_triangle_edge_ids_follow_input():
    g = make_graph(3, [(1, 2), (2, 3), (3, 1)])
    assert g.m == 3
    assert [g.edge_id(*e) for e in [(1, 2), (2, 3), (1, 3)]] == [0, 1, 2]
    assert g.has_edge(2, 1) and not g.has_edge(1, 1)


@pytest.mark.parametrize(
    "n, edges, fragment",
    [
        (2, [(1, 1)], "self-loop"),
        (3, [(1, 2), (2, 1)], "duplicate"),
        (3, [(1, 4)], "outside"),
        (0, [], "positive"),
    ],
)
def test_make_graph_rejects(n, edges, fragment):
    with pytest.raises(GraphError, match=fragment):
        make_graph(n, edges)


def test_petersen_from_drawing(petersen):
    g, _ = petersen
    assert (g.n, g.m) == (10, 15)
    assert set(g.degrees()[1:]) == {3}


def test_spanning_tree_examples(petersen):
    k3 = make_graph(3, [(1, 2), (2, 3), (3, 1)])
    assert is_spanning_tree(k3, {0, 1})
    assert not is_spanning_tree(k3, {0, 1, 2})
    c4 = make_graph(4, C4)
    assert not is_spanning_tree(c4, {0, 2})
    g, o = petersen
    assert is_spanning_tree(g, [o.at(p) for p in range(1, 10)])


def test_spanning_tree_rejects_bad_id():
    with pytest.raises(GraphError):
        is_spanning_tree(make_graph(2, [(1, 2)]), [3])


def test_spanning_tree_matches_reachability_oracle():
    rng = random.Random(11)
    checked = 0
    while checked < 1200:
        n = rng.randint(2, 12)
        g = random_connected_graph(rng, n, rng.randint(0, n))
        size = rng.choice([n - 1, n - 1, rng.randint(0, g.m)])
        ids = rng.sample(range(g.m), min(size, g.m))
        assert is_spanning_tree(g, ids) == oracle_spanning_tree(g, ids)
        checked += 1


def test_window_wraps():
    g = make_graph(4, C4)
    o = identity_ordering(4)
    assert window(g, o, 1).edge_ids == (0, 1, 2)
    assert window(g, o, 3).edge_ids == (2, 3, 0)


def test_petersen_window_at_8(petersen):
    g, o = petersen
    assert window(g, o, 8).edge_ids == tuple(o.at(p) for p in [*range(8, 16), 1])


def test_window_too_few_edges():
    g = make_graph(4, [(1, 2), (3, 4)])
    with pytest.raises(GraphError, match="too-few-edges"):
        window(g, identity_ordering(2), 1)


def test_ordering_must_be_permutation():
    with pytest.raises(OrderingError):
        EdgeOrdering((0, 0, 1))
    assert EdgeOrdering((2, 0, 1)).position_map() == [2, 3, 1]


def test_rotate_examples():
    o = identity_ordering(3)
    assert rotate_ordering(o, 1).positions == (1, 2, 0)
    assert rotate_ordering(o, 3) == o
    assert rotate_ordering(o, -1).positions == (2, 0, 1)


@given(st.integers(3, 9), st.integers(0, 6), st.integers(-30, 30), st.randoms(use_true_random=False))
def test_rotation_and_reversal_preserve_window_sets(n, extra, k, rnd):
    g = random_connected_graph(rnd, n, extra)
    o = EdgeOrdering(tuple(rnd.sample(range(g.m), g.m)))

    def window_sets(ordering):
        return sorted(
            sorted(window(g, ordering, s).edge_ids) for s in range(1, g.m + 1)
        )

    assert window_sets(rotate_ordering(o, k)) == window_sets(o)
    assert window_sets(reverse_ordering(o)) == window_sets(o)


def test_dot_export(petersen):
    k3 = make_graph(3, [(1, 2), (2, 3), (3, 1)])
    plain = export_dot(k3)
    assert plain.count("--") == 3 and "label" not in plain
    labelled = export_dot(k3, identity_ordering(3))
    assert [f'label="{p}"' in labelled for p in (1, 2, 3)] == [True] * 3
    g, o = petersen
    text = export_dot(g, o)
    pos = o.position_map()
    for e, (u, v) in enumerate(g.edges):
        assert f'{u} -- {v} [label="{pos[e]}"];' in text


def test_graph_text_round_trip():
    rng = random.Random(5)
    for _ in range(50):
        g = random_connected_graph(rng, rng.randint(2, 15), rng.randint(0, 10))
        text = format_graph(g, ["family=test"])
        back = parse_graph(text)
        assert back == g
        assert format_graph(back, ["family=test"]) == text
        assert graph_comments(text) == ["family=test"]
        o = EdgeOrdering(tuple(rng.sample(range(g.m), g.m)))
        assert parse_ordering(format_ordering(o)) == o


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("# c\n3 2\n1 2\n2 2\n", 4),
        ("3 1\n1 x\n", 2),
        ("3 2\n1 2\n2 1\n", 3),
        ("3 1\n1 5\n", 2),
        ("3\n", 1),
    ],
)
def test_parse_graph_reports_line(text, lineno):
    with pytest.raises(FormatError, match=f"line {lineno}:"):
        parse_graph(text)


def test_parse_graph_edge_count_mismatch():
    with pytest.raises(FormatError, match="declared 3 edges"):
        parse_graph("3 3\n1 2\n")


def test_parse_ordering_errors():
    with pytest.raises(FormatError, match="line 2"):
        parse_ordering("0\nfoo\n")
    with pytest.raises(FormatError):
        parse_ordering("0\n0\n")


def test_report_text():
    assert str(VerifyReport(True)) == "CBO"
    assert str(VerifyReport(False, 3, "cycle-in-window")) == "NOT-CBO start=3 reason=cycle-in-window"
    assert str(VerifyReport(False, None, "too-few-edges")) == "NOT-CBO start=none reason=too-few-edges"
