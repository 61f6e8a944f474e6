"""Greedy path selection by minimum color count, plus feasibility checks
and capacity-based upper bounds on the joint flow.

The selection rule: a path whose edges carry only its own color competes
with nobody, so it ships first; after that the active path with the fewest
distinct colors ships next, always at its current residual bottleneck.
Ties break on (commodity, ordinal).  The shipped total is a lower bound on
the joint optimum; upper_bounds reports two capacity relaxations next to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .maxflow import ACTIVE, DISCARDED, ColoredPath, Cut
from .netmodel import Network
from .tables import FlowTables, apply_shipment

__all__ = [
    "Assignment",
    "BoundReport",
    "UpperBounds",
    "greedy_solve",
    "inclusion_exclusion_bound",
    "upper_bounds",
    "validate_assignment",
]


@dataclass
class Assignment:
    """Result of a greedy run: shipments in order plus derived totals.

    edge_flow maps (commodity index, edge id) to shipped units; only
    positive entries are stored.
    """

    shipments: list[tuple[ColoredPath, int]]
    discarded: list[ColoredPath]
    edge_flow: dict[tuple[int, int], int]
    per_commodity_value: dict[int, int]
    total_value: int


def greedy_solve(tables: FlowTables) -> Assignment:
    """Ship paths in minimum-color-count order until none stay active.

    Requires freshly built tables (every path active).  Feasible by
    construction: each shipment moves exactly the path's current residual
    bottleneck.
    """
    if any(path.status != ACTIVE for path in tables.paths):
        raise ValueError("greedy_solve requires freshly built tables")
    shipments: list[tuple[ColoredPath, int]] = []
    discarded: list[ColoredPath] = []
    recorded: set[tuple[int, int]] = set()
    edge_flow: dict[tuple[int, int], int] = {}
    per_commodity = {com.index: 0 for com in tables.network.commodities}
    while True:
        active = tables.active_paths()
        if not active:
            break
        choice = min(
            active,
            key=lambda p: (
                tables.path_color_count[tables.index_of(p)],
                p.commodity,
                p.ordinal,
            ),
        )
        amount = tables.path_bottleneck[tables.index_of(choice)]
        apply_shipment(tables, choice, amount)
        shipments.append((choice, amount))
        per_commodity[choice.commodity] += amount
        for eid in choice.edges:
            key = (choice.commodity, eid)
            edge_flow[key] = edge_flow.get(key, 0) + amount
        for path in tables.paths:
            if path.status == DISCARDED and path.key not in recorded:
                recorded.add(path.key)
                discarded.append(path)
    total = sum(amount for _, amount in shipments)
    return Assignment(shipments, discarded, edge_flow, per_commodity, total)


@dataclass
class BoundReport:
    """Alternating-sum bound with all its terms laid out."""

    individual_cut_sums: dict[int, int]
    intersection_terms: dict[tuple[int, ...], int]
    bound: int


def inclusion_exclusion_bound(cuts: Sequence[Cut]) -> BoundReport:
    """Alternating-sign sum of shared cut capacity over every nonempty
    commodity subset: singletons add, pairs subtract, triples add, and so
    on, intersecting the cut edge sets."""
    edge_sets = [frozenset(e.id for e in cut.cut_edges) for cut in cuts]
    capacity: dict[int, int] = {}
    for cut in cuts:
        for edge in cut.cut_edges:
            capacity[edge.id] = edge.capacity
    individual = {
        position + 1: sum(capacity[eid] for eid in edge_sets[position])
        for position in range(len(cuts))
    }
    terms: dict[tuple[int, ...], int] = {}
    bound = 0
    for size in range(1, len(cuts) + 1):
        sign = 1 if size % 2 == 1 else -1
        for subset in combinations(range(len(cuts)), size):
            shared = frozenset.intersection(*(edge_sets[i] for i in subset))
            weight = sum(capacity[eid] for eid in shared)
            terms[tuple(i + 1 for i in subset)] = weight
            bound += sign * weight
    return BoundReport(individual, terms, bound)


def validate_assignment(net: Network, assignment: Assignment) -> list[str]:
    """Check capacity sharing, per-commodity conservation, and totals.

    Returns one message per violation; raises ValueError if the assignment
    references an edge or commodity the network does not have.
    """
    known = {com.index for com in net.commodities}
    for commodity_index, eid in assignment.edge_flow:
        if commodity_index not in known:
            raise ValueError(f"assignment references unknown commodity {commodity_index}")
        if not 0 <= eid < len(net.edges):
            raise ValueError(f"assignment references unknown edge {eid}")
    violations: list[str] = []
    for (commodity_index, eid), units in assignment.edge_flow.items():
        if units < 0:
            violations.append(
                f"commodity {commodity_index}, edge {eid}: negative flow {units}"
            )
    for edge in net.edges:
        used = sum(
            assignment.edge_flow.get((com.index, edge.id), 0)
            for com in net.commodities
        )
        if used > edge.capacity:
            violations.append(
                f"edge {edge.id} ({edge.tail}->{edge.head}):"
                f" total flow {used} exceeds capacity {edge.capacity}"
            )
    for com in net.commodities:
        for node in net.nodes:
            if node in (com.source, com.sink):
                continue
            inflow = sum(
                assignment.edge_flow.get((com.index, e.id), 0)
                for e in net.edges
                if e.head == node
            )
            outflow = sum(
                assignment.edge_flow.get((com.index, e.id), 0)
                for e in net.edges
                if e.tail == node
            )
            if inflow != outflow:
                violations.append(
                    f"commodity {com.index}, node {node}:"
                    f" inflow {inflow} != outflow {outflow}"
                )
        net_out = sum(
            assignment.edge_flow.get((com.index, e.id), 0)
            for e in net.edges
            if e.tail == com.source
        ) - sum(
            assignment.edge_flow.get((com.index, e.id), 0)
            for e in net.edges
            if e.head == com.source
        )
        declared = assignment.per_commodity_value.get(com.index, 0)
        if net_out != declared:
            violations.append(
                f"commodity {com.index}: declared value {declared}"
                f" != net source outflow {net_out}"
            )
    shipped = sum(amount for _, amount in assignment.shipments)
    if assignment.total_value != shipped:
        violations.append(
            f"total {assignment.total_value} != shipment sum {shipped}"
        )
    split = sum(assignment.per_commodity_value.values())
    if assignment.total_value != split:
        violations.append(
            f"total {assignment.total_value} != per-commodity sum {split}"
        )
    return violations


@dataclass(frozen=True)
class UpperBounds:
    """Two relaxations reported next to any assignment."""

    individual_total: int
    inclusion_exclusion: int


def upper_bounds(net: Network, tables: FlowTables) -> UpperBounds:
    total = sum(tables.commodity_value[com.index] for com in net.commodities)
    ordered = [tables.cuts[com.index] for com in net.commodities]
    return UpperBounds(total, inclusion_exclusion_bound(ordered).bound)
