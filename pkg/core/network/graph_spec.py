"""Graph descriptions from which problem instances are synthesized"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from core.exceptions import GraphSpecError

CONSERVATION_SLACK = 1e-12


class NodeSpec(BaseModel):
    """
    A node of the graph.

    retention is the share of the node's quantity that stays put (A_ii);
    diffusion lists (target id, rate) shares that flow to other nodes.
    """
    id: int
    state_cost: float = 0.0
    retention: float = 1.0
    diffusion: List[Tuple[int, float]] = Field(default_factory=list)


class EdgeSpec(BaseModel):
    """A directed edge; efficiency is the share that arrives at dest"""
    origin: int
    dest: int
    transport_cost: float = 0.0
    efficiency: float = 1.0


class GraphSpec(BaseModel):
    """Nodes in state order, edges in input order within each origin"""
    nodes: List[NodeSpec]
    edges: List[EdgeSpec] = Field(default_factory=list)
    target: Optional[int] = None

    @property
    def n(self) -> int:
        return len(self.nodes)

    def index_of(self) -> Dict[int, int]:
        """Map node id to its 0-based state index"""
        return {node.id: k for k, node in enumerate(self.nodes)}

    def edges_by_origin(self) -> List[List[EdgeSpec]]:
        """Edges grouped per origin node, in node order"""
        index = self.index_of()
        groups: List[List[EdgeSpec]] = [[] for _ in self.nodes]
        for edge in self.edges:
            groups[index[edge.origin]].append(edge)
        return groups


def check_graph_spec(g: GraphSpec) -> None:
    """
    Check ids, endpoints, costs, efficiencies and conservation

    Raises:
        GraphSpecError: On the first problem found
    """
    if not g.nodes:
        raise GraphSpecError("Graph has no nodes")
    index = g.index_of()
    if len(index) != len(g.nodes):
        raise GraphSpecError("Node ids must be unique")

    for node in g.nodes:
        if node.state_cost < 0:
            raise GraphSpecError(f"Node {node.id}: negative state cost {node.state_cost}")
        if not 0.0 <= node.retention <= 1.0:
            raise GraphSpecError(f"Node {node.id}: retention {node.retention} outside [0, 1]")
        outflow = 0.0
        for target, rate in node.diffusion:
            if target not in index or target == node.id:
                raise GraphSpecError(f"Node {node.id}: diffusion toward invalid node {target}")
            if rate < 0:
                raise GraphSpecError(f"Node {node.id}: negative diffusion rate {rate}")
            outflow += rate
        if node.retention + outflow > 1.0 + CONSERVATION_SLACK:
            raise GraphSpecError(
                f"Node {node.id}: retention plus diffusion {node.retention + outflow:.6g} exceeds 1"
            )

    for edge in g.edges:
        if edge.origin not in index or edge.dest not in index:
            raise GraphSpecError(f"Edge {edge.origin}->{edge.dest} references a missing node")
        if edge.origin == edge.dest:
            raise GraphSpecError(f"Edge {edge.origin}->{edge.dest} is a self loop")
        if edge.transport_cost < 0:
            raise GraphSpecError(
                f"Edge {edge.origin}->{edge.dest}: negative transport cost {edge.transport_cost}"
            )
        if not 0.0 < edge.efficiency <= 1.0:
            raise GraphSpecError(
                f"Edge {edge.origin}->{edge.dest}: efficiency {edge.efficiency} outside (0, 1]"
            )

    if g.target is not None and g.target not in index:
        raise GraphSpecError(f"Target {g.target} is not a node")


def check_pipe_symmetry(g: GraphSpec) -> List[str]:
    """
    Directed edges lacking a reverse twin with equal cost and efficiency

    Returns:
        One message per offending edge; empty when every pipe is symmetric
    """
    lookup = {(e.origin, e.dest): e for e in g.edges}
    problems = []
    for edge in g.edges:
        twin = lookup.get((edge.dest, edge.origin))
        if twin is None:
            problems.append(f"Edge {edge.origin}->{edge.dest} has no reverse edge")
        elif (twin.transport_cost, twin.efficiency) != (edge.transport_cost, edge.efficiency):
            problems.append(
                f"Edge {edge.origin}->{edge.dest} differs from its reverse in cost or efficiency"
            )
    return problems
