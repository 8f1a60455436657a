"""Edge orderings transcribed from published drawings.

Each fixture is a pair of data files (``<name>.graph``, ``<name>.order``)
whose first comment names the figure caption.  Where the drawing shows a
family the constructions cover, ``vertex_map`` sends the drawing's vertex
numbers to the canonical ids of :mod:`cbo.families`, so constructed and
drawn orderings can be compared position by position.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .families import FamilySpec
from .graph import EdgeOrdering, Graph, graph_comments, parse_graph, parse_ordering


@dataclass(frozen=True)
class Fixture:
    name: str
    family: FamilySpec | None = None
    vertex_map: dict[int, int] = field(default_factory=dict)
    # positions of the drawing that the construction reproduces
    matched_prefix: int = 0

    def _text(self, suffix: str) -> str:
        return resources.files("cbo").joinpath(f"data/figures/{self.name}{suffix}").read_text()

    def graph_text(self) -> str:
        return self._text(".graph")

    def ordering_text(self) -> str:
        return self._text(".order")

    def graph(self) -> Graph:
        return parse_graph(self.graph_text())

    def ordering(self) -> EdgeOrdering:
        return parse_ordering(self.ordering_text())

    @property
    def caption(self) -> str:
        for line in graph_comments(self.graph_text()):
            if line.startswith("figure:"):
                return line.split(":", 1)[1].strip()
        return ""

    def canonical_sequence(self) -> list[frozenset]:
        """Drawn ordering as endpoint sets in canonical family ids."""
        g, o = self.graph(), self.ordering()
        vmap = self.vertex_map
        return [frozenset(vmap.get(v, v) for v in g.edges[e]) for e in o]


def _shift_hub(n: int) -> dict[int, int]:
    # double wheel drawings number v_0 as node 1 and v_i as node i+1
    vmap = {1: n}
    vmap.update({k: k - 1 for k in range(2, n + 1)})
    return vmap


FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture("petersen"),
        Fixture("square_cycle_7", FamilySpec("square_cycle", {"n": 7}), matched_prefix=14),
        Fixture("square_cycle_6", FamilySpec("square_cycle", {"n": 6}), matched_prefix=12),
        Fixture("wheel_6", FamilySpec("wheel", {"n": 6}), matched_prefix=10),
        Fixture("wheel_7", FamilySpec("wheel", {"n": 7}), matched_prefix=12),
        Fixture("double_wheel_6", FamilySpec("double_wheel", {"n": 6}), _shift_hub(6), 12),
        Fixture("double_wheel_7", FamilySpec("double_wheel", {"n": 7}), _shift_hub(7), 15),
        Fixture("double_wheel_8", FamilySpec("double_wheel", {"n": 8}), _shift_hub(8), 18),
        Fixture(
            "broken_wheel_8",
            FamilySpec("broken_wheel_one_spoke", {"n": 8}),
            {8: 8},
            matched_prefix=13,
        ),
        Fixture("prism_3", FamilySpec("prism", {"n": 3})),
        Fixture("prism_5", FamilySpec("prism", {"n": 5})),
        Fixture("prism_8", FamilySpec("prism", {"n": 8}), matched_prefix=24),
        Fixture("prism_11", FamilySpec("prism", {"n": 11}), matched_prefix=33),
    ]
}


def write_fixtures(directory: str | Path) -> list[Path]:
    """Copy every fixture's graph and ordering file into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for fx in FIXTURES.values():
        for suffix, text in ((".graph", fx.graph_text()), (".order", fx.ordering_text())):
            path = directory / f"{fx.name}{suffix}"
            path.write_text(text)
            written.append(path)
    return written
