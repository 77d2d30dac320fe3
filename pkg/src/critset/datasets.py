"""Built-in demo graph: seven unit-weight nodes in two weak components.

Node 1 reaches {1,2,3,5}, node 4 reaches {3,4,5}, and node 6 reaches the
whole second component {6,7}, so the three of them together soil the
entire graph. The bundled ``tables`` command and much of the test suite
score fixed shortlists of subsets of this graph.
"""
from __future__ import annotations

from .graphs import Graph, parse_graph

DEMO_GRAPH_TEXT = """\
# two weak components: {1,2,3,4,5} and {6,7}
node 1
node 2
node 3
node 4
node 5
node 6
node 7
edge 1 2
edge 1 3
edge 2 5
edge 3 5
edge 4 3
edge 6 7
"""

# Subsets scored by the demo tables, in fixed row order.
DEMO_SHORTLIST: tuple[frozenset[str], ...] = (
    frozenset({"1", "6"}),
    frozenset({"3", "5"}),
    frozenset({"2", "4", "7"}),
    frozenset({"2", "6"}),
    frozenset({"1", "4", "6"}),
)

# The gated table appends three single-component subsets.
DEMO_SHORTLIST_GATED: tuple[frozenset[str], ...] = DEMO_SHORTLIST + (
    frozenset({"1", "4"}),
    frozenset({"6"}),
    frozenset({"2", "4"}),
)


def demo_graph() -> Graph:
    return parse_graph(DEMO_GRAPH_TEXT)
