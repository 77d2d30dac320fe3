"""Weighted directed graphs: validation, file parsing, weak connectivity.

Node ids are plain string tokens. Node and edge weights are strictly
positive; at most one edge may join an ordered (source, target) pair.
Graphs are immutable once built and safe to share across workers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

MEASURE_MODES = ("node", "edge")

NodeSpec = Union[str, tuple]
EdgeSpec = tuple


class GraphError(ValueError):
    """Invalid graph structure, weights, or measure mode."""


class GraphParseError(GraphError):
    """Malformed graph file content."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _check_id(node_id) -> str:
    if not isinstance(node_id, str) or not node_id or node_id.split() != [node_id]:
        raise GraphError(f"node id must be a non-empty token without whitespace, got {node_id!r}")
    return node_id


def _check_weight(value, what: str) -> float:
    w = float(value)
    if not w > 0:
        raise GraphError(f"non-positive weight {value!r} on {what}")
    return w


class Graph:
    """Immutable directed graph with positive node and edge weights.

    ``nodes`` entries are ids or ``(id, weight)`` pairs (weight defaults
    to 1); ``edges`` entries are ``(src, dst)`` or ``(src, dst, weight)``.
    Self-loops, cycles, and disconnected graphs are all allowed.
    """

    __slots__ = ("_node_w", "_edge_w", "_succ", "_total_node_w", "_total_edge_w", "_hash")

    def __init__(self, nodes: Iterable[NodeSpec], edges: Iterable[EdgeSpec] = ()):
        node_w: dict[str, float] = {}
        for spec in nodes:
            node_id, w = (spec, 1.0) if isinstance(spec, str) else spec
            node_id = _check_id(node_id)
            if node_id in node_w:
                raise GraphError(f"duplicate node id {node_id!r}")
            node_w[node_id] = _check_weight(w, f"node {node_id!r}")

        edge_w: dict[tuple[str, str], float] = {}
        succ: dict[str, list[str]] = {v: [] for v in node_w}
        for spec in edges:
            if len(spec) == 2:
                src, dst, w = spec[0], spec[1], 1.0
            else:
                src, dst, w = spec
            for endpoint in (src, dst):
                if endpoint not in node_w:
                    raise GraphError(f"edge ({src!r}, {dst!r}) references undeclared node {endpoint!r}")
            if (src, dst) in edge_w:
                raise GraphError(f"duplicate edge ({src!r}, {dst!r})")
            edge_w[(src, dst)] = _check_weight(w, f"edge ({src!r}, {dst!r})")
            succ[src].append(dst)

        self._node_w = node_w
        self._edge_w = edge_w
        self._succ = {v: tuple(ts) for v, ts in succ.items()}
        self._total_node_w = sum(node_w.values())
        self._total_edge_w = sum(edge_w.values())
        self._hash = None

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(self._node_w)

    @property
    def n_nodes(self) -> int:
        return len(self._node_w)

    @property
    def n_edges(self) -> int:
        return len(self._edge_w)

    @property
    def edges(self) -> tuple[tuple[str, str, float], ...]:
        return tuple((s, t, w) for (s, t), w in self._edge_w.items())

    def has_node(self, node_id: str) -> bool:
        return node_id in self._node_w

    def has_edge(self, src: str, dst: str) -> bool:
        return (src, dst) in self._edge_w

    def node_weight(self, node_id: str) -> float:
        try:
            return self._node_w[node_id]
        except KeyError:
            raise GraphError(f"unknown node id {node_id!r}") from None

    def edge_weight(self, src: str, dst: str) -> float:
        try:
            return self._edge_w[(src, dst)]
        except KeyError:
            raise GraphError(f"no edge ({src!r}, {dst!r})") from None

    def successors(self, node_id: str) -> tuple[str, ...]:
        try:
            return self._succ[node_id]
        except KeyError:
            raise GraphError(f"unknown node id {node_id!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._node_w == other._node_w and self._edge_w == other._edge_w

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._node_w.items()), frozenset(self._edge_w.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n_nodes} nodes, {self.n_edges} edges)"


@dataclass(frozen=True)
class ComponentPartition:
    """Disjoint node sets connected when edge direction is ignored."""

    components: tuple[frozenset[str], ...]
    component_of: dict[str, int]

    @property
    def n_components(self) -> int:
        return len(self.components)


@lru_cache(maxsize=128)
def weak_components(g: Graph) -> ComponentPartition:
    """Partition nodes by connectivity in the undirected view of ``g``."""
    neighbors: dict[str, set[str]] = {v: set() for v in g.node_ids}
    for src, dst, _ in g.edges:
        neighbors[src].add(dst)
        neighbors[dst].add(src)

    component_of: dict[str, int] = {}
    components: list[frozenset[str]] = []
    for start in g.node_ids:
        if start in component_of:
            continue
        index = len(components)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            component_of[v] = index
            for u in neighbors[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        components.append(frozenset(seen))
    return ComponentPartition(tuple(components), component_of)


def total_weight(g: Graph, mode: str = "node") -> float:
    """Sum of node weights (``mode="node"``) or edge weights (``"edge"``)."""
    if mode not in MEASURE_MODES:
        raise GraphError(f"unknown measure mode {mode!r}; expected one of {MEASURE_MODES}")
    if mode == "node":
        return g._total_node_w
    if g.n_edges == 0:
        raise GraphError("edge measure is undefined on an edgeless graph")
    return g._total_edge_w


def parse_graph(text: str) -> Graph:
    """Parse graph file content into a Graph.

    One record per line: ``node <id> [weight]``, ``edge <src> <dst>
    [weight]``, or ``# comment``. Fields are whitespace separated and
    weights default to 1. Errors report the offending line number.
    """
    nodes: list[tuple[str, float, int]] = []
    edge_lines: list[tuple[str, str, float, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        try:
            if kind == "node" and len(fields) in (2, 3):
                w = float(fields[2]) if len(fields) == 3 else 1.0
                nodes.append((fields[1], w, line_no))
            elif kind == "edge" and len(fields) in (3, 4):
                w = float(fields[3]) if len(fields) == 4 else 1.0
                edge_lines.append((fields[1], fields[2], w, line_no))
            else:
                raise GraphParseError(line_no, f"malformed record {line!r}")
        except ValueError as exc:
            if isinstance(exc, GraphParseError):
                raise
            raise GraphParseError(line_no, f"bad weight in {line!r}") from None

    node_w: dict[str, float] = {}
    for node_id, w, line_no in nodes:
        try:
            _check_id(node_id)
            if node_id in node_w:
                raise GraphError(f"duplicate node id {node_id!r}")
            node_w[node_id] = _check_weight(w, f"node {node_id!r}")
        except GraphError as exc:
            raise GraphParseError(line_no, str(exc)) from None

    edges: list[tuple[str, str, float]] = []
    seen_pairs: set[tuple[str, str]] = set()
    for src, dst, w, line_no in edge_lines:
        try:
            for endpoint in (src, dst):
                if endpoint not in node_w:
                    raise GraphError(f"edge references undeclared node {endpoint!r}")
            if (src, dst) in seen_pairs:
                raise GraphError(f"duplicate edge ({src!r}, {dst!r})")
            seen_pairs.add((src, dst))
            edges.append((src, dst, _check_weight(w, f"edge ({src!r}, {dst!r})")))
        except GraphError as exc:
            raise GraphParseError(line_no, str(exc)) from None

    return Graph(node_w.items(), edges)


def serialize_graph(g: Graph) -> str:
    """Render ``g`` in the graph file format; parses back to an equal Graph."""
    lines = []
    for node_id in g.node_ids:
        w = g.node_weight(node_id)
        lines.append(f"node {node_id}" if w == 1.0 else f"node {node_id} {w!r}")
    for src, dst, w in g.edges:
        lines.append(f"edge {src} {dst}" if w == 1.0 else f"edge {src} {dst} {w!r}")
    return "\n".join(lines) + "\n"
