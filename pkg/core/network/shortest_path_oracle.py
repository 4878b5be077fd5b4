"""Classical shortest paths and route extraction for shortest-path instances"""
import logging
from typing import List, Optional, Sequence

import networkx as nx
import numpy as np

from core.exceptions import DimensionMismatchError, RouteCycleError
from core.policy import Policy
from models.problem import ProblemData
from .graph_spec import GraphSpec, check_graph_spec

logger = logging.getLogger("posiflow.network")


def shortest_path_oracle(g: GraphSpec) -> np.ndarray:
    """
    Distances to the target with edge weight transport_cost + origin state_cost

    Computed with Dijkstra on the reversed graph; unreachable nodes get inf.
    """
    check_graph_spec(g)
    if g.target is None:
        return np.full(g.n, np.inf)
    state_cost = {node.id: node.state_cost for node in g.nodes}
    reversed_graph = nx.DiGraph()
    reversed_graph.add_nodes_from(node.id for node in g.nodes)
    for edge in g.edges:
        weight = edge.transport_cost + state_cost[edge.origin]
        # parallel edges keep the cheapest
        if reversed_graph.has_edge(edge.dest, edge.origin):
            weight = min(weight, reversed_graph[edge.dest][edge.origin]["weight"])
        reversed_graph.add_edge(edge.dest, edge.origin, weight=weight)
    lengths = nx.single_source_dijkstra_path_length(reversed_graph, g.target, weight="weight")
    return np.array([lengths.get(node.id, np.inf) for node in g.nodes], dtype=np.float64)


def extract_route(
    pol: Policy,
    prob: ProblemData,
    origin: int,
    node_ids: Optional[Sequence[int]] = None,
) -> List[int]:
    """
    Follow each node's selected edge from origin until a node takes no action

    Args:
        pol: Policy of a shortest-path instance
        prob: The instance the policy was extracted from
        origin: Node id to start from
        node_ids: Node id of every state index; defaults to 1..n

    Returns:
        Visited node ids, origin first

    Raises:
        RouteCycleError: If a node is visited twice
    """
    ids = list(node_ids) if node_ids is not None else list(range(1, prob.n + 1))
    if len(ids) != prob.n or len(pol.choices) != prob.M:
        raise DimensionMismatchError("Policy, instance and node ids do not agree")
    position = {node_id: k for k, node_id in enumerate(ids)}
    if origin not in position:
        raise ValueError(f"Unknown origin node {origin}")

    B = prob.B.tocsc()
    k = position[origin]
    route = [origin]
    while k < prob.M and pol.choices[k] is not None:
        column = int(prob.block_offsets[k] + pol.choices[k])
        start, end = B.indptr[column], B.indptr[column + 1]
        rows, vals = B.indices[start:end], B.data[start:end]
        k = int(rows[np.argmax(vals)])
        if ids[k] in route:
            route.append(ids[k])
            logger.error("routing policy revisits node %s", ids[k])
            raise RouteCycleError(route)
        route.append(ids[k])
    return route
