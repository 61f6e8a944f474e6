"""Exhaustive path enumeration, branch-and-bound optimum, and the
heuristic-versus-optimum report."""

import random

import pytest
from hypothesis import given, settings

from helpers import exhaustive_best, networks, random_network
from mcflow import (
    OracleLimitError,
    build_tables,
    enumerate_paths,
    gap_report,
    greedy_solve,
    max_flow,
    optimal_value,
    parse_network,
)


class TestEnumeratePaths:
    def test_golden_commodity_1(self, golden_net):
        paths = enumerate_paths(golden_net, golden_net.commodity(1))
        assert [(p.edges, p.bottleneck) for p in paths] == [
            ((0,), 5),
            ((1, 2, 3), 10),
        ]

    def test_golden_commodity_2_has_four_paths(self, golden_net):
        paths = enumerate_paths(golden_net, golden_net.commodity(2))
        assert [(p.edges, p.bottleneck) for p in paths] == [
            ((4, 0, 7), 5),
            ((4, 1, 2, 3, 7), 10),
            ((4, 1, 5), 10),
            ((6, 3, 7), 10),
        ]

    def test_limit_enforced(self, golden_net):
        with pytest.raises(OracleLimitError, match="more than 2"):
            enumerate_paths(golden_net, golden_net.commodity(2), limit=2)

    def test_no_route_gives_empty_list(self):
        net = parse_network("node s\nnode t\nedge t s 3\ncommodity s t\n")
        assert enumerate_paths(net, net.commodity(1)) == []

    def test_zero_capacity_path_is_still_listed(self):
        net = parse_network("node s\nnode t\nedge s t 0\ncommodity s t\n")
        paths = enumerate_paths(net, net.commodity(1))
        assert [(p.edges, p.bottleneck) for p in paths] == [((0,), 0)]

    @settings(max_examples=40)
    @given(networks(max_nodes=5, max_edges=8, max_commodities=1))
    def test_paths_are_simple_and_sorted_by_discovery(self, net):
        com = net.commodities[0]
        paths = enumerate_paths(net, com, limit=200)
        seen = set()
        for p in paths:
            assert p.commodity == com.index
            assert p.edges not in seen
            seen.add(p.edges)
            nodes = [com.source]
            for eid in p.edges:
                edge = net.edges[eid]
                assert edge.tail == nodes[-1]
                nodes.append(edge.head)
            assert nodes[-1] == com.sink
            assert len(set(nodes)) == len(nodes)
            assert p.bottleneck == min(net.edges[eid].capacity for eid in p.edges)


class TestOptimalValue:
    def test_golden_optimum_and_witness(self, golden_net):
        result = optimal_value(golden_net)
        assert result.optimum == 25
        assert not result.truncated
        assert result.witness == (5, 0, 0, 0, 10, 10)
        assert [p.edges for p in result.paths] == [
            (0,),
            (1, 2, 3),
            (4, 0, 7),
            (4, 1, 2, 3, 7),
            (4, 1, 5),
            (6, 3, 7),
        ]

    def test_golden_witness_is_feasible(self, golden_net):
        result = optimal_value(golden_net)
        usage = [0] * len(golden_net.edges)
        for path, amount in zip(result.paths, result.witness):
            assert 0 <= amount <= path.bottleneck
            for eid in path.edges:
                usage[eid] += amount
        assert all(usage[e.id] <= e.capacity for e in golden_net.edges)
        assert sum(result.witness) == 25

    def test_optimum_invariant_under_edge_reordering(self, golden_text):
        lines = golden_text.splitlines()
        edges = [ln for ln in lines if ln.startswith("edge")]
        rest_head = [ln for ln in lines if ln.startswith("node")]
        rest_tail = [ln for ln in lines if ln.startswith("commodity")]
        rng = random.Random(3)
        for _ in range(5):
            rng.shuffle(edges)
            permuted = "\n".join(rest_head + edges + rest_tail) + "\n"
            assert optimal_value(parse_network(permuted)).optimum == 25

    def test_witness_is_lexicographically_smallest(self):
        # Two routes fight over one unit; the tie must resolve to the
        # later path so earlier amounts stay minimal.
        net = parse_network(
            "node s\nnode a\nnode t\n"
            "edge s a 1\nedge a t 1\nedge s a 1\n"
            "commodity s t\n"
        )
        result = optimal_value(net)
        assert [p.edges for p in result.paths] == [(0, 1), (2, 1)]
        assert result.optimum == 1
        assert result.witness == (0, 1)

    def test_single_commodity_matches_max_flow(self):
        rng = random.Random(808)
        for _ in range(40):
            net = random_network(rng, max_nodes=5, max_edges=8, max_cap=6)
            com = net.commodities[0]
            result = optimal_value(net, max_paths=200)
            assert not result.truncated
            assert result.optimum == max_flow(net, com.source, com.sink).value

    def test_matches_brute_force_product_enumeration(self):
        rng = random.Random(909)
        checked = 0
        while checked < 25:
            net = random_network(rng, max_nodes=4, max_edges=6, max_cap=3, commodity_range=(1, 2))
            catalog = [
                p for com in net.commodities for p in enumerate_paths(net, com, limit=50)
            ]
            combos = 1
            for p in catalog:
                combos *= p.bottleneck + 1
            if combos > 100_000:
                continue
            result = optimal_value(net, max_paths=50)
            assert not result.truncated
            assert result.optimum == exhaustive_best(net, catalog)
            checked += 1

    def test_no_route_gives_zero(self):
        net = parse_network("node s\nnode t\nedge t s 3\ncommodity s t\n")
        result = optimal_value(net)
        assert result.optimum == 0
        assert result.witness == ()
        assert not result.truncated

    def test_path_limit_truncates(self, golden_net):
        result = optimal_value(golden_net, max_paths=2)
        assert result.truncated
        assert result.optimum == 0 and result.paths == ()

    def test_candidate_budget_truncates(self, golden_net):
        result = optimal_value(golden_net, max_candidates=1)
        assert result.truncated
        assert result.explored <= 2

    def test_truncated_optimum_is_still_a_lower_bound(self, golden_net):
        for budget in (10, 100, 1000):
            result = optimal_value(golden_net, max_candidates=budget)
            assert result.optimum <= 25

    def test_restricted_catalog_bounds_greedy_from_above(self):
        rng = random.Random(606)
        for _ in range(30):
            net = random_network(rng, max_nodes=5, max_edges=8, max_cap=6, commodity_range=(2, 2))
            tables = build_tables(net)
            catalog = list(tables.paths)
            total = greedy_solve(build_tables(net)).total_value
            result = optimal_value(net, catalog=catalog)
            assert not result.truncated
            assert result.optimum >= total

    def test_deterministic_across_runs(self, golden_net):
        assert optimal_value(golden_net) == optimal_value(golden_net)


class TestGapReport:
    def test_golden_report(self, golden_net):
        report = gap_report(golden_net)
        assert report.heuristic_value == 25
        assert report.optimum == 25
        assert report.gap == 0
        assert report.individual_total == 35
        assert report.inclusion_exclusion == 35
        assert not report.truncated

    def test_disjoint_report(self, disjoint_net):
        report = gap_report(disjoint_net)
        assert report.heuristic_value == report.optimum == 10
        assert report.gap == 0

    def test_seeded_corpus_gap_nonnegative_and_bounded(self):
        rng = random.Random(13579)
        for _ in range(30):
            net = random_network(rng, max_nodes=5, max_edges=8, max_cap=5, commodity_range=(2, 2))
            report = gap_report(net, max_paths=100, max_candidates=500_000)
            if report.truncated:
                continue
            assert report.gap >= 0
            assert report.heuristic_value <= report.optimum
            assert report.optimum <= report.inclusion_exclusion
            assert report.optimum <= report.individual_total

    def test_truncation_is_reported(self, golden_net):
        assert gap_report(golden_net, max_candidates=1).truncated
