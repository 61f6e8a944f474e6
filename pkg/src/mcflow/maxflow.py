"""Single-commodity maximum flow and its decomposition.

Augmenting paths are found breadth first over the residual graph with a
fixed tie-break (forward residual edges before backward ones at the same
depth, lower edge ids first), so repeated runs produce identical paths,
identical flows, and an identical min cut.  The min cut returned is the
canonical one: the set of nodes residually reachable from the source at
termination, together with the saturated edges leaving that set.

decompose_cut_paths peels a max flow into simple source-sink paths, lowest
edge id first, after cancelling any flow cycles.  Every peeled path crosses
the min cut exactly once.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .netmodel import Edge, Network, path_nodes

__all__ = [
    "ACTIVE",
    "AugmentResult",
    "Color",
    "ColoredPath",
    "Cut",
    "DISCARDED",
    "FlowState",
    "USED",
    "augment",
    "decompose_cut_paths",
    "find_augmenting_path",
    "max_flow",
    "zero_flow",
]

ACTIVE = "active"
USED = "used"
DISCARDED = "discarded"


@dataclass(frozen=True)
class Color:
    """Label owned by exactly one decomposed path."""

    id: int
    commodity: int
    ordinal: int
    name: str


@dataclass
class ColoredPath:
    """One decomposed source-sink path.

    `bottleneck` is the amount the decomposition assigned to the path;
    the live residual bottleneck is tracked separately by the tables.
    """

    commodity: int
    ordinal: int
    edges: tuple[int, ...]
    bottleneck: int
    color: Color | None = None
    status: str = ACTIVE

    @property
    def label(self) -> str:
        return f"P{self.commodity}.{self.ordinal}"

    @property
    def key(self) -> tuple[int, int]:
        return (self.commodity, self.ordinal)


@dataclass(frozen=True)
class Cut:
    """Source-side node set with the edges (and capacity) leaving it."""

    source_side: frozenset[str]
    cut_edges: tuple[Edge, ...]
    capacity: int


@dataclass(frozen=True)
class AugmentResult:
    """An augmenting path: nodes, per-edge direction, and its leeway."""

    nodes: tuple[str, ...]
    steps: tuple[tuple[int, bool], ...]  # (edge id, traversed forward?)
    leeway: int


@dataclass(frozen=True)
class FlowState:
    """A feasible flow for one commodity; min_cut is set at termination."""

    commodity: int
    source: str
    sink: str
    edge_flow: tuple[int, ...]
    value: int
    min_cut: Cut | None = None


def _check_endpoints(net: Network, s: str, t: str) -> None:
    for v in (s, t):
        if v not in net.node_set:
            raise ValueError(f"node {v!r} not in network")


def _adjacency(net: Network) -> tuple[dict[str, list[Edge]], dict[str, list[Edge]]]:
    # Declaration order equals id order, so these lists are already sorted.
    out: dict[str, list[Edge]] = {v: [] for v in net.nodes}
    inc: dict[str, list[Edge]] = {v: [] for v in net.nodes}
    for edge in net.edges:
        out[edge.tail].append(edge)
        inc[edge.head].append(edge)
    return out, inc


def zero_flow(net: Network, s: str, t: str, commodity: int = 0) -> FlowState:
    _check_endpoints(net, s, t)
    return FlowState(commodity, s, t, (0,) * len(net.edges), 0)


def find_augmenting_path(
    net: Network, f: FlowState, s: str, t: str
) -> AugmentResult | None:
    """Shortest residual s-t path, or None when the flow is maximal.

    Breadth first; at equal depth forward residual edges win over backward
    ones and lower edge ids win within each kind.
    """
    _check_endpoints(net, s, t)
    if s == t:
        raise ValueError("source equals sink")
    out, inc = _adjacency(net)
    parent: dict[str, tuple[str, int, bool]] = {}
    seen = {s}
    queue = deque([s])
    while queue and t not in seen:
        u = queue.popleft()
        for edge in out[u]:  # forward residual edges first
            if edge.head not in seen and f.edge_flow[edge.id] < edge.capacity:
                seen.add(edge.head)
                parent[edge.head] = (u, edge.id, True)
                queue.append(edge.head)
        for edge in inc[u]:  # then backward residual edges
            if edge.tail not in seen and f.edge_flow[edge.id] > 0:
                seen.add(edge.tail)
                parent[edge.tail] = (u, edge.id, False)
                queue.append(edge.tail)
    if t not in seen:
        return None
    steps: list[tuple[int, bool]] = []
    nodes = [t]
    v = t
    while v != s:
        u, eid, forward = parent[v]
        steps.append((eid, forward))
        nodes.append(u)
        v = u
    steps.reverse()
    nodes.reverse()
    leeway = min(
        net.edges[eid].capacity - f.edge_flow[eid] if forward else f.edge_flow[eid]
        for eid, forward in steps
    )
    return AugmentResult(tuple(nodes), tuple(steps), leeway)


def augment(net: Network, f: FlowState, a: AugmentResult) -> FlowState:
    """Push a.leeway units along the path; returns the new flow state."""
    if a.leeway <= 0:
        raise ValueError("leeway must be positive")
    flows = list(f.edge_flow)
    for eid, forward in a.steps:
        if forward:
            if flows[eid] + a.leeway > net.edges[eid].capacity:
                raise ValueError(f"leeway violates capacity of edge {eid}")
            flows[eid] += a.leeway
        else:
            if flows[eid] - a.leeway < 0:
                raise ValueError(f"leeway drives edge {eid} negative")
            flows[eid] -= a.leeway
    return FlowState(f.commodity, f.source, f.sink, tuple(flows), f.value + a.leeway)


def _residual_reachable(net: Network, f: FlowState, s: str) -> frozenset[str]:
    out, inc = _adjacency(net)
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for edge in out[u]:
            if edge.head not in seen and f.edge_flow[edge.id] < edge.capacity:
                seen.add(edge.head)
                queue.append(edge.head)
        for edge in inc[u]:
            if edge.tail not in seen and f.edge_flow[edge.id] > 0:
                seen.add(edge.tail)
                queue.append(edge.tail)
    return frozenset(seen)


def max_flow(net: Network, s: str, t: str, commodity: int = 0) -> FlowState:
    """Augment to completion; the result carries the canonical min cut."""
    _check_endpoints(net, s, t)
    if s == t:
        raise ValueError("source equals sink")
    f = zero_flow(net, s, t, commodity)
    budget = sum(e.capacity for e in net.edges if e.tail == s)
    rounds = 0
    while True:
        found = find_augmenting_path(net, f, s, t)
        if found is None:
            break
        f = augment(net, f, found)
        rounds += 1
        assert rounds <= budget, "augmentation count exceeded total source capacity"
    source_side = _residual_reachable(net, f, s)
    cut_edges = tuple(
        e for e in net.edges if e.tail in source_side and e.head not in source_side
    )
    cut = Cut(source_side, cut_edges, sum(e.capacity for e in cut_edges))
    assert t not in source_side
    assert f.value == cut.capacity, "flow value must equal the reachability cut capacity"
    return FlowState(commodity, s, t, f.edge_flow, f.value, cut)


def _find_flow_cycle(
    net: Network, out: dict[str, list[Edge]], flows: list[int]
) -> list[int] | None:
    """Edge ids of one directed cycle in the positive-flow subgraph."""
    WHITE, GRAY, BLACK = 0, 1, 2
    state = dict.fromkeys(net.nodes, WHITE)

    def positive(v: str) -> list[Edge]:
        return [e for e in out[v] if flows[e.id] > 0]

    for start in net.nodes:
        if state[start] != WHITE:
            continue
        stack: list[tuple[str, object]] = [(start, iter(positive(start)))]
        trail: list[Edge] = []  # trail[i] joins stack[i] to stack[i+1]
        state[start] = GRAY
        while stack:
            node, edges_left = stack[-1]
            step = next(edges_left, None)  # type: ignore[arg-type]
            if step is None:
                state[node] = BLACK
                stack.pop()
                if trail:
                    trail.pop()
                continue
            if step.tail == step.head:
                return [step.id]
            if state[step.head] == GRAY:
                cycle = [step.id]
                for back in reversed(trail):
                    cycle.append(back.id)
                    if back.tail == step.head:
                        break
                return cycle
            if state[step.head] == WHITE:
                state[step.head] = GRAY
                trail.append(step)
                stack.append((step.head, iter(positive(step.head))))
    return None


def _cancel_flow_cycles(net: Network, out: dict[str, list[Edge]], flows: list[int]) -> None:
    # Backward augmentations can leave flow cycles; they carry no
    # source-sink value, so zero them before peeling paths.
    while True:
        cycle = _find_flow_cycle(net, out, flows)
        if cycle is None:
            return
        delta = min(flows[eid] for eid in cycle)
        for eid in cycle:
            flows[eid] -= delta


def decompose_cut_paths(net: Network, f: FlowState) -> list[ColoredPath]:
    """Peel a max flow into simple source-sink paths (colors unassigned).

    Deterministic: flow cycles are cancelled first, then the walk following
    the lowest-id positive-flow edge out of each node is peeled by its
    bottleneck, repeatedly, until the source has no positive out-flow.
    """
    if find_augmenting_path(net, f, f.source, f.sink) is not None:
        raise ValueError("flow is not maximal; decomposition requires a max flow")
    cut = f.min_cut
    if cut is None:
        source_side = _residual_reachable(net, f, f.source)
        cut_edges = tuple(
            e for e in net.edges if e.tail in source_side and e.head not in source_side
        )
        cut = Cut(source_side, cut_edges, sum(e.capacity for e in cut_edges))
    cut_ids = {e.id for e in cut.cut_edges}
    out, _ = _adjacency(net)
    flows = list(f.edge_flow)
    _cancel_flow_cycles(net, out, flows)
    paths: list[ColoredPath] = []
    peeled = 0
    while any(flows[e.id] > 0 for e in out[f.source]):
        walk: list[int] = []
        v = f.source
        while v != f.sink:
            candidates = [e for e in out[v] if flows[e.id] > 0]
            assert candidates, f"flow conservation broken at {v!r}"
            walk.append(candidates[0].id)
            v = candidates[0].head
            assert len(walk) <= len(net.edges), "cycle encountered during peeling"
        amount = min(flows[eid] for eid in walk)
        for eid in walk:
            flows[eid] -= amount
        peeled += amount
        visited = path_nodes(net, walk)
        assert len(set(visited)) == len(visited), "peeled path is not simple"
        assert sum(1 for eid in walk if eid in cut_ids) == 1, (
            "path must cross the min cut exactly once"
        )
        paths.append(ColoredPath(f.commodity, len(paths) + 1, tuple(walk), amount))
    assert peeled == f.value, "decomposition amounts must sum to the flow value"
    return paths
