"""Network data model: text parsing, validation, rendering, and DOT export.

The text format is line oriented, UTF-8, one directive per line:

    # comment                        ignored, as are blank lines
    node <name>
    edge <tail> <head> <capacity>    capacity: nonnegative decimal integer
    commodity <source> <sink>

Every node must be declared before the first edge or commodity line that
references it.  Edge ids are dense, 0..p-1, in declaration order; commodity
indices are 1-based, also in declaration order.  Parallel edges are legal,
self-loops are not, and zero-capacity edges are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:  # pragma: no cover
    from .heuristic import Assignment

__all__ = [
    "Commodity",
    "Edge",
    "Network",
    "NetworkParseError",
    "export_dot",
    "parse_network",
    "path_nodes",
    "render_network",
    "render_path",
    "validate_network",
]


class NetworkParseError(ValueError):
    """Malformed network text; `line` is the 1-based offending line."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class Edge:
    """Directed edge with a nonnegative integer capacity."""

    id: int
    tail: str
    head: str
    capacity: int


@dataclass(frozen=True)
class Commodity:
    """A (source, sink) demand pair; `index` is 1-based."""

    index: int
    source: str
    sink: str


@dataclass(frozen=True)
class Network:
    """Immutable directed network with an ordered commodity list."""

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]
    commodities: tuple[Commodity, ...]

    @cached_property
    def node_set(self) -> frozenset[str]:
        return frozenset(self.nodes)

    def commodity(self, index: int) -> Commodity:
        for com in self.commodities:
            if com.index == index:
                return com
        raise ValueError(f"no commodity with index {index}")


_DIRECTIVE_ARITY = {"node": 2, "edge": 4, "commodity": 3}


def parse_network(text: str) -> Network:
    """Parse network text; raises NetworkParseError with a line number.

    Accepted input always satisfies validate_network, so downstream code
    can rely on parsed networks being structurally sound.
    """
    nodes: list[str] = []
    node_set: set[str] = set()
    edges: list[Edge] = []
    commodities: list[Commodity] = []

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        directive = parts[0]
        arity = _DIRECTIVE_ARITY.get(directive)
        if arity is None:
            raise NetworkParseError(lineno, f"unknown directive {directive!r}")
        if len(parts) != arity:
            raise NetworkParseError(
                lineno,
                f"{directive!r} expects {arity - 1} arguments, got {len(parts) - 1}",
            )
        if directive == "node":
            name = parts[1]
            if name in node_set:
                raise NetworkParseError(lineno, f"duplicate node name {name!r}")
            nodes.append(name)
            node_set.add(name)
        elif directive == "edge":
            tail, head, cap_token = parts[1], parts[2], parts[3]
            for endpoint in (tail, head):
                if endpoint not in node_set:
                    raise NetworkParseError(
                        lineno, f"edge endpoint {endpoint!r} not declared"
                    )
            try:
                capacity = int(cap_token)
            except ValueError:
                raise NetworkParseError(
                    lineno, f"capacity {cap_token!r} is not an integer"
                ) from None
            if capacity < 0:
                raise NetworkParseError(lineno, f"negative capacity {capacity}")
            if tail == head:
                raise NetworkParseError(lineno, f"self-loop on node {tail!r}")
            edges.append(Edge(len(edges), tail, head, capacity))
        else:
            source, sink = parts[1], parts[2]
            for endpoint in (source, sink):
                if endpoint not in node_set:
                    raise NetworkParseError(
                        lineno, f"commodity endpoint {endpoint!r} not declared"
                    )
            if source == sink:
                raise NetworkParseError(lineno, "commodity source equals sink")
            commodities.append(Commodity(len(commodities) + 1, source, sink))

    end = max(len(lines), 1)
    if not edges:
        raise NetworkParseError(end, "no edges declared")
    if not commodities:
        raise NetworkParseError(end, "no commodities declared")
    return Network(tuple(nodes), tuple(edges), tuple(commodities))


def validate_network(net: Network) -> list[str]:
    """Return one message per violated structural invariant; [] when sound."""
    violations: list[str] = []
    seen: set[str] = set()
    for name in net.nodes:
        if not name:
            violations.append("empty node name")
        elif any(ch.isspace() for ch in name) or not name.isprintable():
            violations.append(f"node name {name!r} contains whitespace or unprintable characters")
        if name in seen:
            violations.append(f"duplicate node name {name!r}")
        seen.add(name)
    if not net.edges:
        violations.append("network has no edges")
    if not net.commodities:
        violations.append("network has no commodities")
    for position, edge in enumerate(net.edges):
        tag = f"edge {edge.id} ({edge.tail}->{edge.head})"
        if edge.id != position:
            violations.append(f"{tag}: id not dense at position {position}")
        for endpoint in (edge.tail, edge.head):
            if endpoint not in net.node_set:
                violations.append(f"{tag}: endpoint {endpoint!r} not declared")
        if isinstance(edge.capacity, bool) or not isinstance(edge.capacity, int):
            violations.append(f"{tag}: capacity {edge.capacity!r} is not an integer")
        elif edge.capacity < 0:
            violations.append(f"{tag}: negative capacity {edge.capacity}")
        if edge.tail == edge.head:
            violations.append(f"{tag}: self-loop")
    for position, com in enumerate(net.commodities):
        tag = f"commodity {com.index}"
        if com.index != position + 1:
            violations.append(f"{tag}: index not dense at position {position}")
        for endpoint in (com.source, com.sink):
            if endpoint not in net.node_set:
                violations.append(f"{tag}: endpoint {endpoint!r} not declared")
        if com.source == com.sink:
            violations.append(f"{tag}: source equals sink")
    return violations


def render_network(net: Network) -> str:
    """Serialize a network; parse_network inverts this exactly."""
    lines = [f"node {name}" for name in net.nodes]
    lines += [f"edge {e.tail} {e.head} {e.capacity}" for e in net.edges]
    lines += [f"commodity {c.source} {c.sink}" for c in net.commodities]
    return "\n".join(lines) + "\n"


def path_nodes(net: Network, edge_ids: Sequence[int]) -> list[str]:
    """Node sequence visited by consecutive edges."""
    if not edge_ids:
        return []
    nodes = [net.edges[edge_ids[0]].tail]
    for eid in edge_ids:
        edge = net.edges[eid]
        if edge.tail != nodes[-1]:
            raise ValueError(f"edge {eid} does not continue the path at {nodes[-1]!r}")
        nodes.append(edge.head)
    return nodes


def render_path(net: Network, edge_ids: Sequence[int]) -> str:
    return "->".join(path_nodes(net, edge_ids))


_DOT_COLORS = (
    "blue",
    "red",
    "forestgreen",
    "darkorange",
    "purple",
    "brown",
    "teal",
    "magenta",
)


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _commodity_color(index: int) -> str:
    return _DOT_COLORS[(index - 1) % len(_DOT_COLORS)]


def export_dot(net: Network, assignment: "Assignment | None" = None) -> str:
    """Render the network as Graphviz DOT text.

    Without an assignment every edge is labeled with its capacity.  With
    one, edges are labeled "flow/capacity" (flow summed over commodities)
    and colored by the commodities whose flow they carry; idle edges are
    gray.  Raises ValueError if the assignment references an edge or
    commodity the network does not have.
    """
    if assignment is not None:
        known = {com.index for com in net.commodities}
        for commodity_index, edge_id in assignment.edge_flow:
            if commodity_index not in known:
                raise ValueError(f"assignment references unknown commodity {commodity_index}")
            if not 0 <= edge_id < len(net.edges):
                raise ValueError(f"assignment references unknown edge {edge_id}")
    lines = ["digraph network {", "  rankdir=LR;", "  node [shape=circle, fontsize=11];"]
    for com in net.commodities:
        lines.append(
            f"  // commodity {com.index}: {com.source} -> {com.sink}"
            f" [{_commodity_color(com.index)}]"
        )
    for name in net.nodes:
        lines.append(f"  {_dot_quote(name)};")
    for edge in net.edges:
        if assignment is None:
            attrs = f'label="{edge.capacity}"'
        else:
            total = sum(
                assignment.edge_flow.get((com.index, edge.id), 0)
                for com in net.commodities
            )
            carriers = [
                com.index
                for com in net.commodities
                if assignment.edge_flow.get((com.index, edge.id), 0) > 0
            ]
            color = ":".join(_commodity_color(i) for i in carriers) or "gray"
            attrs = f'label="{total}/{edge.capacity}", color="{color}"'
        lines.append(f"  {_dot_quote(edge.tail)} -> {_dot_quote(edge.head)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
