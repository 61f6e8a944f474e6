"""The five bookkeeping tables that drive greedy path selection.

build_tables runs every commodity's max flow on the original network,
decomposes each into colored paths, and records:

    edge_colors       per edge: color ids of the non-discarded paths using it
    edge_residual     per edge: capacity not yet claimed by shipments
    path_record       per path: its edges with their original capacities
    path_bottleneck   per path: minimum residual along its edges (live)
    path_color_count  per path: distinct colors over its edges

Shipping a path (apply_shipment) subtracts its current bottleneck from
every edge it uses, marks it used, discards any still-active path that
lost all slack on some edge, strips discarded paths' colors from
edge_colors, and refreshes the two derived columns.  path_record is
written once and never rewritten.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maxflow import (
    ACTIVE,
    DISCARDED,
    USED,
    Color,
    ColoredPath,
    Cut,
    decompose_cut_paths,
    max_flow,
)
from .netmodel import Network, validate_network

__all__ = [
    "COLOR_NAMES",
    "FlowTables",
    "apply_shipment",
    "audit_tables",
    "build_tables",
    "color_count",
]

COLOR_NAMES = (
    "Violet",
    "Red",
    "Green",
    "Yellow",
    "Blue",
    "Orange",
    "Cyan",
    "Magenta",
    "Brown",
    "Pink",
    "Olive",
    "Teal",
    "Navy",
    "Maroon",
    "Coral",
    "Indigo",
)


def _color_name(position: int) -> str:
    if position < len(COLOR_NAMES):
        return COLOR_NAMES[position]
    return f"Color{position + 1}"


@dataclass
class FlowTables:
    """Single-owner mutable bundle; all mutation goes through apply_shipment."""

    network: Network
    paths: list[ColoredPath]
    edge_colors: list[set[int]]
    edge_residual: list[int]
    path_record: list[tuple[tuple[int, int], ...]]
    path_bottleneck: list[int]
    path_color_count: list[int]
    cuts: dict[int, Cut]
    commodity_value: dict[int, int]
    colors: dict[int, Color]

    def index_of(self, path: ColoredPath) -> int:
        for position, candidate in enumerate(self.paths):
            if candidate.key == path.key:
                return position
        raise ValueError(f"path {path.label} not in tables")

    def active_paths(self) -> list[ColoredPath]:
        return [p for p in self.paths if p.status == ACTIVE]


def _refresh(tables: FlowTables) -> None:
    tables.path_bottleneck = [
        min(tables.edge_residual[eid] for eid in path.edges) for path in tables.paths
    ]
    tables.path_color_count = [
        len(set().union(*(tables.edge_colors[eid] for eid in path.edges)))
        for path in tables.paths
    ]


def build_tables(net: Network) -> FlowTables:
    """Run per-commodity max flows and assemble the tables.

    Every path starts active; colors are assigned in path order from
    COLOR_NAMES.  Raises ValueError when the network fails validation.
    """
    problems = validate_network(net)
    if problems:
        raise ValueError("invalid network: " + "; ".join(problems))
    paths: list[ColoredPath] = []
    cuts: dict[int, Cut] = {}
    commodity_value: dict[int, int] = {}
    for com in net.commodities:
        flow = max_flow(net, com.source, com.sink, commodity=com.index)
        assert flow.min_cut is not None
        cuts[com.index] = flow.min_cut
        commodity_value[com.index] = flow.value
        paths.extend(decompose_cut_paths(net, flow))
    colors: dict[int, Color] = {}
    for position, path in enumerate(paths):
        color = Color(position + 1, path.commodity, path.ordinal, _color_name(position))
        path.color = color
        colors[color.id] = color
    edge_colors: list[set[int]] = [set() for _ in net.edges]
    for path in paths:
        for eid in path.edges:
            edge_colors[eid].add(path.color.id)
    tables = FlowTables(
        network=net,
        paths=paths,
        edge_colors=edge_colors,
        edge_residual=[e.capacity for e in net.edges],
        path_record=[
            tuple((eid, net.edges[eid].capacity) for eid in path.edges)
            for path in paths
        ],
        path_bottleneck=[],
        path_color_count=[],
        cuts=cuts,
        commodity_value=commodity_value,
        colors=colors,
    )
    _refresh(tables)
    return tables


def color_count(tables: FlowTables, path: ColoredPath) -> int:
    """Distinct colors over the path's edges (discarded paths excluded)."""
    position = tables.index_of(path)
    if tables.paths[position].status != ACTIVE:
        raise ValueError(f"path {path.label} is not active")
    return tables.path_color_count[position]


def apply_shipment(tables: FlowTables, path: ColoredPath, amount: int) -> FlowTables:
    """Ship `amount` (the path's current bottleneck) and update the tables.

    The shipped path is marked used and keeps its colors.  Any active path
    left with a zero-residual edge is discarded and its color removed from
    edge_colors everywhere; bottleneck and color-count columns are then
    recomputed.
    """
    position = tables.index_of(path)
    target = tables.paths[position]
    if target.status != ACTIVE:
        raise ValueError(f"path {target.label} is not active")
    bottleneck = tables.path_bottleneck[position]
    if amount <= 0 or amount != bottleneck:
        raise ValueError(
            f"shipment of {amount} on {target.label} differs from its bottleneck {bottleneck}"
        )
    for eid in target.edges:
        tables.edge_residual[eid] -= amount
    target.status = USED
    for candidate in tables.paths:
        if candidate.status != ACTIVE:
            continue
        if any(tables.edge_residual[eid] == 0 for eid in candidate.edges):
            candidate.status = DISCARDED
            assert candidate.color is not None
            for eid in candidate.edges:
                tables.edge_colors[eid].discard(candidate.color.id)
    _refresh(tables)
    return tables


def audit_tables(tables: FlowTables) -> list[str]:
    """Cross-check every table against its defining rule; [] when clean."""
    problems: list[str] = []
    net = tables.network
    expected_colors: list[set[int]] = [set() for _ in net.edges]
    for path in tables.paths:
        if path.status != DISCARDED and path.color is not None:
            for eid in path.edges:
                expected_colors[eid].add(path.color.id)
    for edge in net.edges:
        if tables.edge_colors[edge.id] != expected_colors[edge.id]:
            problems.append(f"edge {edge.id}: color set out of sync")
        residual = tables.edge_residual[edge.id]
        if not 0 <= residual <= edge.capacity:
            problems.append(
                f"edge {edge.id}: residual {residual} outside [0, {edge.capacity}]"
            )
    seen_colors: set[int] = set()
    for position, path in enumerate(tables.paths):
        if path.color is None or path.color.id in seen_colors:
            problems.append(f"{path.label}: color missing or reused")
            continue
        seen_colors.add(path.color.id)
        bottleneck = min(tables.edge_residual[eid] for eid in path.edges)
        if tables.path_bottleneck[position] != bottleneck:
            problems.append(f"{path.label}: bottleneck column out of sync")
        union: set[int] = set().union(*(tables.edge_colors[eid] for eid in path.edges))
        if tables.path_color_count[position] != len(union):
            problems.append(f"{path.label}: color count column out of sync")
        if path.status == ACTIVE and path.color.id not in union:
            problems.append(f"{path.label}: active path lost its own color")
    return problems
