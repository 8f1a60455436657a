from __future__ import annotations

import random

import networkx as nx
import pytest

from cbo.fixtures import FIXTURES
from cbo.graph import EdgeOrdering, Graph, make_graph


def to_nx(g: Graph, edge_ids=None) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    ids = range(g.m) if edge_ids is None else edge_ids
    h.add_edges_from(g.edges[e] for e in ids)
    return h


def oracle_spanning_tree(g: Graph, edge_ids) -> bool:
    ids = list(edge_ids)
    if len(ids) != len(set(ids)):
        return False
    return nx.is_tree(to_nx(g, ids))


def oracle_first_failure(g: Graph, o: EdgeOrdering) -> int | None:
    """Smallest start whose window is not a spanning tree, by brute force."""
    m, k = g.m, g.n - 1
    seq = list(o.positions)
    for s in range(m):
        ids = [seq[(s + i) % m] for i in range(k)]
        if not oracle_spanning_tree(g, ids):
            return s + 1
    return None


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random spanning tree plus ``extra`` random chords (fewer if saturated)."""
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    edges = {frozenset((verts[i], verts[rng.randrange(i)])) for i in range(1, n)}
    free = [frozenset((u, v)) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    free = [e for e in free if e not in edges]
    rng.shuffle(free)
    edges.update(free[:extra])
    pairs = [tuple(sorted(e)) for e in edges]
    rng.shuffle(pairs)
    return make_graph(n, pairs)


def shuffled(rng: random.Random, m: int) -> EdgeOrdering:
    ids = list(range(m))
    rng.shuffle(ids)
    return EdgeOrdering(tuple(ids))


@pytest.fixture
def petersen():
    fx = FIXTURES["petersen"]
    return fx.graph(), fx.ordering()


K4_PENDANT = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
