"""Shared generators and independent oracles for the test suite.

The oracles here are deliberately written from scratch against the
definitions (subset enumeration, plain breadth-first search, itertools
products) so library results are checked by a second route, not by
themselves.
"""

from __future__ import annotations

import itertools
from collections import deque

from hypothesis import strategies as st

from mcflow import Commodity, Edge, Network


def random_network(rng, max_nodes=8, max_edges=16, max_cap=10, commodity_range=(1, 1)):
    """Seeded random network; always passes validate_network."""
    node_count = rng.randint(2, max_nodes)
    names = tuple(f"v{i}" for i in range(node_count))
    edge_count = rng.randint(1, max_edges)
    edges = []
    for eid in range(edge_count):
        tail, head = rng.sample(range(node_count), 2)
        edges.append(Edge(eid, names[tail], names[head], rng.randint(0, max_cap)))
    low, high = commodity_range
    commodities = []
    for index in range(1, rng.randint(low, high) + 1):
        source, sink = rng.sample(range(node_count), 2)
        commodities.append(Commodity(index, names[source], names[sink]))
    return Network(names, tuple(edges), tuple(commodities))


def brute_force_min_cut(net: Network, s: str, t: str) -> int:
    """Minimum cut capacity over every source-side subset containing s."""
    others = [v for v in net.nodes if v not in (s, t)]
    best = None
    for mask in range(1 << len(others)):
        side = {s}
        for bit, node in enumerate(others):
            if mask >> bit & 1:
                side.add(node)
        cap = sum(e.capacity for e in net.edges if e.tail in side and e.head not in side)
        if best is None or cap < best:
            best = cap
    return best


def residual_hop_distance(net: Network, edge_flow, s: str, t: str):
    """Plain BFS hop count over residual edges; None when unreachable."""
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for e in net.edges:
            if e.tail == u and edge_flow[e.id] < e.capacity and e.head not in dist:
                dist[e.head] = dist[u] + 1
                queue.append(e.head)
            if e.head == u and edge_flow[e.id] > 0 and e.tail not in dist:
                dist[e.tail] = dist[u] + 1
                queue.append(e.tail)
    return dist.get(t)


def flow_is_feasible(net: Network, edge_flow, s: str, t: str) -> bool:
    """Capacity bounds plus conservation away from s and t."""
    for e in net.edges:
        if not 0 <= edge_flow[e.id] <= e.capacity:
            return False
    for v in net.nodes:
        if v in (s, t):
            continue
        inflow = sum(edge_flow[e.id] for e in net.edges if e.head == v)
        outflow = sum(edge_flow[e.id] for e in net.edges if e.tail == v)
        if inflow != outflow:
            return False
    return True


def exhaustive_best(net: Network, paths) -> int:
    """Optimum by brute product enumeration; only call on tiny catalogs."""
    best = 0
    ranges = [range(p.bottleneck + 1) for p in paths]
    for amounts in itertools.product(*ranges):
        usage = [0] * len(net.edges)
        for path, amount in zip(paths, amounts):
            for eid in path.edges:
                usage[eid] += amount
        if all(usage[e.id] <= e.capacity for e in net.edges):
            best = max(best, sum(amounts))
    return best


def direct_inclusion_exclusion(edge_sets, capacities) -> int:
    """Alternating subset-sum evaluation over explicit edge-id sets."""
    total = 0
    n = len(edge_sets)
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            shared = set(edge_sets[combo[0]])
            for i in combo[1:]:
                shared &= edge_sets[i]
            term = sum(capacities[eid] for eid in shared)
            total += term if size % 2 == 1 else -term
    return total


@st.composite
def networks(draw, max_nodes=6, max_edges=10, max_cap=10, max_commodities=2):
    """Hypothesis strategy for small valid networks."""
    node_count = draw(st.integers(2, max_nodes))
    names = tuple(f"n{i}" for i in range(node_count))
    edge_count = draw(st.integers(1, max_edges))
    edges = []
    for eid in range(edge_count):
        tail = draw(st.integers(0, node_count - 1))
        head = draw(st.integers(0, node_count - 2))
        if head >= tail:
            head += 1
        edges.append(Edge(eid, names[tail], names[head], draw(st.integers(0, max_cap))))
    commodity_count = draw(st.integers(1, max_commodities))
    commodities = []
    for index in range(1, commodity_count + 1):
        source = draw(st.integers(0, node_count - 1))
        sink = draw(st.integers(0, node_count - 2))
        if sink >= source:
            sink += 1
        commodities.append(Commodity(index, names[source], names[sink]))
    return Network(names, tuple(edges), tuple(commodities))
