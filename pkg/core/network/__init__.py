"""
Instances from graphs.

This module provides:
- GraphSpec records and their JSON files
- Shortest-path and flow-network builders
- A seeded cooling-network generator
- A Dijkstra oracle and route extraction for cross-checks
"""

from .graph_spec import NodeSpec, EdgeSpec, GraphSpec, check_graph_spec, check_pipe_symmetry
from .network_builder import build_shortest_path, build_flow_network
from .cooling_generator import GeneratorConfig, CoolingGenerator, generate_cooling_instance
from .shortest_path_oracle import shortest_path_oracle, extract_route
from .graph_file import load_graph_spec, save_graph_spec

__all__ = [
    # Graph records
    "NodeSpec",
    "EdgeSpec",
    "GraphSpec",
    "check_graph_spec",
    "check_pipe_symmetry",

    # Builders
    "build_shortest_path",
    "build_flow_network",

    # Generator
    "GeneratorConfig",
    "CoolingGenerator",
    "generate_cooling_instance",

    # Oracle
    "shortest_path_oracle",
    "extract_route",

    # Files
    "load_graph_spec",
    "save_graph_spec",
]
