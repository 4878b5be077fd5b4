"""Per-agent state and the local data each agent may hold"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict

from core.exceptions import DimensionMismatchError
from models.problem import ProblemData, require_valid

logger = logging.getLogger("posiflow.distsim")


class AgentState(BaseModel):
    """
    Agent i of the distributed iteration.

    Holds its estimates p_hat and q_hat, column i of A and E restricted to
    its neighbors, its own input block B_i on the rows it touches, and the
    costs s_i, r_i.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    id: int
    p_hat: float = 0.0
    q_hat: float = 0.0
    s: float
    r: np.ndarray
    a_column: Dict[int, float]
    e_column: Dict[int, float]
    b_rows: Tuple[int, ...]
    b_local: np.ndarray
    neighbors_A: Tuple[int, ...]
    neighbors_E: Tuple[int, ...]
    neighbors_B: Tuple[int, ...]
    argmin: Optional[int] = None
    local_reduced_costs: Optional[np.ndarray] = None

    @property
    def p_read_set(self) -> Tuple[int, ...]:
        """Agents whose p_hat this agent receives"""
        return tuple(sorted(set(self.neighbors_A) | set(self.neighbors_B)))

    def allowed_reads(self) -> set:
        return {(j, "p") for j in self.p_read_set} | {(j, "q") for j in self.neighbors_E}


def _column_entries(matrix: sp.csc_array, i: int) -> Dict[int, float]:
    start, end = matrix.indptr[i], matrix.indptr[i + 1]
    return {
        int(j): float(v)
        for j, v in zip(matrix.indices[start:end], matrix.data[start:end])
        if v != 0
    }


def _b_neighbors(block: sp.csr_array, i: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Support rows of B_i and the rows sharing a column with row i"""
    pattern = sp.csr_array(block, copy=True)
    pattern.eliminate_zeros()
    pattern.data = np.abs(pattern.data)
    support = tuple(int(j) for j in np.flatnonzero(np.asarray(pattern.sum(axis=1)).reshape(-1)))
    gram = (pattern @ pattern.T).tocsr()
    start, end = gram.indptr[i], gram.indptr[i + 1]
    neighbors = tuple(sorted(int(j) for j in gram.indices[start:end] if j != i))
    return support, neighbors


def build_agents(prob: ProblemData, allow_unsafe: bool = False) -> List[AgentState]:
    """
    Distribute the instance over n agents, one per state

    Neighbor sets are out-neighbors: N_A = {j != i : A_ji != 0},
    N_E = {j != i : E_ji != 0} and N_B = {j != i : (B_i B_i')_ij != 0}.

    Raises:
        DimensionMismatchError: If M != n
        ValueError: If a column of B_i touches a row outside {i} and N_B,
            which the agent could not evaluate from its neighbors
        InvalidInstanceError: If the instance fails validation
    """
    if prob.M != prob.n:
        raise DimensionMismatchError(f"Distributed iteration needs M = n, got M={prob.M}, n={prob.n}")
    require_valid(prob, allow_unsafe, context="distributed iteration")

    A, E = prob.A.tocsc(), prob.E.tocsc()
    agents = []
    for i in range(prob.n):
        a_column = _column_entries(A, i)
        e_column = _column_entries(E, i)
        block = prob.B_blocks[i]
        support, neighbors_B = _b_neighbors(block, i)
        outside = [j for j in support if j != i and j not in neighbors_B]
        if outside:
            raise ValueError(
                f"Agent {i + 1}: B_{i + 1} has entries on rows {[j + 1 for j in outside]} "
                "that do not share a column with row i"
            )
        agents.append(
            AgentState(
                id=i,
                s=float(prob.s[i]),
                r=np.array(prob.r_blocks[i], dtype=np.float64),
                a_column=a_column,
                e_column=e_column,
                b_rows=support,
                b_local=block.toarray()[list(support), :] if support else np.zeros((0, block.shape[1])),
                neighbors_A=tuple(sorted(j for j in a_column if j != i)),
                neighbors_E=tuple(sorted(j for j in e_column if j != i)),
                neighbors_B=neighbors_B,
            )
        )
    logger.debug("built %d agents", len(agents))
    return agents
