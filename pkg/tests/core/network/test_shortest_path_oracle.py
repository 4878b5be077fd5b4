"""Tests for the Dijkstra oracle and route extraction"""
import time

import numpy as np
import pytest

from core.bellman import value_iterate
from core.exceptions import RouteCycleError
from core.network import build_shortest_path, extract_route, shortest_path_oracle
from core.policy import Policy, extract_policy
from tests.test_utils.assertions import assert_performance_within_limits, assert_vectors_close
from tests.test_utils.instance_factory import random_shortest_path_graph, route_cost


class TestShortestPathOracle:
    def test_routing_example(self, example1_graph, example1_p):
        """Test Dijkstra distances on the routing example"""
        assert_vectors_close(shortest_path_oracle(example1_graph), example1_p)

    def test_agrees_with_value_iteration(self):
        """Test the fixed point and the followed routes against Dijkstra on random graphs"""
        for seed in range(200):
            g = random_shortest_path_graph(np.random.default_rng(seed))
            prob = build_shortest_path(g)
            report = value_iterate(prob)
            distances = shortest_path_oracle(g)
            assert report.converged, f"seed {seed}"
            assert_vectors_close(report.p, distances, message=f"seed {seed}")

            pol = extract_policy(prob, report.p)
            for origin in range(1, g.n + 1):
                route = extract_route(pol, prob, origin)
                assert route[-1] == g.target, f"seed {seed}, origin {origin}"
                assert route_cost(g, route) == pytest.approx(distances[origin - 1], abs=1e-9)

    @pytest.mark.performance
    def test_random_graphs_within_budget(self):
        """Test that 200 oracle comparisons stay under five seconds"""
        start = time.perf_counter()
        for seed in range(200):
            g = random_shortest_path_graph(np.random.default_rng(seed))
            report = value_iterate(build_shortest_path(g))
            shortest_path_oracle(g)
            assert report.converged
        assert_performance_within_limits(time.perf_counter() - start, 5.0)

    def test_without_target(self, example1_graph):
        """Test that no target means every node is unreachable"""
        assert np.isinf(shortest_path_oracle(example1_graph.model_copy(update={"target": None}))).all()


class TestExtractRoute:
    @pytest.fixture
    def example1_policy(self, example1, example1_p):
        return extract_policy(example1, example1_p)

    @pytest.mark.parametrize("origin,route", [(1, [1, 2, 4]), (2, [2, 4]), (3, [3, 4]), (4, [4])])
    def test_routing_example(self, example1, example1_policy, origin, route):
        """Test routes followed by the optimal policy"""
        assert extract_route(example1_policy, example1, origin) == route

    def test_custom_ids(self, example1, example1_policy):
        """Test routes reported with caller node ids"""
        assert extract_route(example1_policy, example1, 10, node_ids=[10, 20, 30, 40]) == [10, 20, 40]

    def test_cycle(self, example1):
        """Test a policy sending nodes 1 and 2 to each other"""
        pol = Policy(choices=[0, 1, None, None], reduced_costs=[np.zeros(k) for k in (3, 2, 2, 3)])
        with pytest.raises(RouteCycleError) as info:
            extract_route(pol, example1, 1)
        assert info.value.route == [1, 2, 1]

    def test_unknown_origin(self, example1, example1_policy):
        """Test an origin outside the node ids"""
        with pytest.raises(ValueError):
            extract_route(example1_policy, example1, 9)
