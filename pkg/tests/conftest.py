"""Global pytest fixtures and configurations"""
import logging
from pathlib import Path

import numpy as np
import pytest

from core.network import build_flow_network, generate_cooling_instance, load_graph_spec
from models.problem import ProblemData

TEST_DATA = Path(__file__).parent / "test_data"


@pytest.fixture(scope="session")
def test_data_dir() -> Path:
    """Directory holding fixture files"""
    return TEST_DATA


def example1_arrays():
    """Four-node shortest-path instance with target node 4"""
    edges = [(1, 2), (1, 3), (1, 4), (2, 4), (2, 1), (3, 4), (3, 1), (4, 1), (4, 2), (4, 3)]
    B = np.zeros((4, 10))
    for k, (origin, dest) in enumerate(edges):
        B[origin - 1, k] = -1.0
        B[dest - 1, k] = 1.0
    r = np.array([0, 0, 2, 0, 0, 1, 0, 2, 0, 1], dtype=float)
    cuts = [0, 3, 5, 7, 10]
    return {
        "A": np.eye(4),
        "B_blocks": [B[:, a:b] for a, b in zip(cuts, cuts[1:])],
        "E": np.eye(4),
        "s": np.array([1, 1, 1, 0], dtype=float),
        "r_blocks": [r[a:b] for a, b in zip(cuts, cuts[1:])],
    }


@pytest.fixture
def example1() -> ProblemData:
    """The four-node routing example"""
    return ProblemData.from_arrays(**example1_arrays())


@pytest.fixture
def example1_p() -> np.ndarray:
    return np.array([2.0, 1.0, 2.0, 0.0])


@pytest.fixture
def example1_graph():
    return load_graph_spec(TEST_DATA / "example1_graph.json")


@pytest.fixture
def scalar_divergent() -> ProblemData:
    """x(t+1) = x(t) with unit state cost and no inputs"""
    return ProblemData.from_arrays(
        A=[[1.0]], B_blocks=[np.zeros((1, 0))], E=[[0.0]], s=[1.0], r_blocks=[[]]
    )


@pytest.fixture
def flow_pair() -> ProblemData:
    """Node 1 keeps its heat, node 2 dissipates half; one edge 1->2"""
    return ProblemData.from_arrays(
        A=np.diag([1.0, 0.5]),
        B_blocks=[np.array([[-1.0], [0.95]]), np.zeros((2, 0))],
        E=np.diag([1.0, 0.5]),
        s=[1.0, 0.2],
        r_blocks=[[0.2], []],
    )


@pytest.fixture(scope="session")
def cooling_specs():
    """Small generated cooling networks, one per seed"""
    return {seed: generate_cooling_instance(8, seed) for seed in (1, 2, 3)}


@pytest.fixture(scope="session")
def cooling_problems(cooling_specs):
    return {seed: build_flow_network(spec) for seed, spec in cooling_specs.items()}


@pytest.fixture(scope="session")
def full_cooling_problems():
    """Generated 26-node cooling networks, one per seed"""
    return {seed: build_flow_network(generate_cooling_instance(26, seed)) for seed in (1, 2, 3)}


@pytest.fixture(autouse=True)
def reset_posiflow_logger():
    """Undo CLI logging setup so caplog sees every record"""
    yield
    logger = logging.getLogger("posiflow")
    logger.handlers = []
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
