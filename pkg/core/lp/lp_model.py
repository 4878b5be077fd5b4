"""Linear program whose optimum is the Bellman fixed point"""
import logging
from typing import List

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, Field

from core.exceptions import DimensionMismatchError
from models.problem import ProblemData

logger = logging.getLogger("posiflow.lp")


class LpConfig(BaseModel):
    """Tolerance of LP feasibility and tightness checks"""
    tau_lp: float = Field(default=1e-8, gt=0)


class LpRow(BaseModel):
    """One inequality sum_k values[k] * x[indices[k]] <= rhs"""
    model_config = ConfigDict(frozen=True)

    name: str
    indices: List[int]
    values: List[float]
    rhs: float
    sense: str = "<="


class LpModel(BaseModel):
    """
    maximize 1'p  subject to  rows,  p >= 0,  z >= 0

    Variables are ordered p_1..p_n then z_1..z_M. Rows are the n Bellman
    rows followed by one reduced-cost row per input column.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    M: int
    objective: List[float]
    rows: List[LpRow]
    labels: List[str]

    @property
    def num_vars(self) -> int:
        return self.n + self.M

    @property
    def bellman_rows(self) -> List[LpRow]:
        return self.rows[:self.n]

    @property
    def reduced_rows(self) -> List[LpRow]:
        return self.rows[self.n:]

    def constraint_matrix(self) -> sp.csr_array:
        """Row-stacked coefficients as a sparse matrix"""
        rows = np.concatenate([[k] * len(row.indices) for k, row in enumerate(self.rows)] or [[]])
        cols = np.concatenate([row.indices for row in self.rows] or [[]])
        vals = np.concatenate([row.values for row in self.rows] or [[]])
        return sp.csr_array(
            sp.coo_array(
                (vals.astype(np.float64), (rows.astype(np.int64), cols.astype(np.int64))),
                shape=(len(self.rows), self.num_vars),
            )
        )

    def rhs(self) -> np.ndarray:
        return np.array([row.rhs for row in self.rows], dtype=np.float64)


def _rows_from(matrix: sp.csr_array, rhs: np.ndarray, names: List[str]) -> List[LpRow]:
    matrix = sp.csr_array(matrix)
    matrix.eliminate_zeros()
    matrix.sort_indices()
    rows = []
    for k, name in enumerate(names):
        start, end = matrix.indptr[k], matrix.indptr[k + 1]
        rows.append(
            LpRow(
                name=name,
                indices=[int(v) for v in matrix.indices[start:end]],
                values=[float(v) for v in matrix.data[start:end]],
                rhs=float(rhs[k]),
            )
        )
    return rows


def partition_indicator(prob: ProblemData) -> sp.csr_array:
    """m x M matrix with a one at (column, partition of column)"""
    cols = np.repeat(np.arange(prob.M, dtype=np.int64), prob.block_sizes)
    return sp.csr_array(
        sp.coo_array(
            (np.ones(prob.m), (np.arange(prob.m, dtype=np.int64), cols)),
            shape=(prob.m, prob.M),
        )
    )


def build_lp(prob: ProblemData, literal_sign: bool = False) -> LpModel:
    """
    Build the linear program

        maximize 1'p
        subject to (I - A')p + sum_i z_i E_i <= s
                   -B_ij'p - z_i <= r_ij         for every input column
                   p >= 0, z >= 0

    so that -z_i = min{r_i + B_i'p, 0} at the optimum.

    Args:
        prob: Problem instance
        literal_sign: Emit the reduced-cost rows in the form B_ij'p - z_i <= -r_ij
            (z_i >= r_ij + B_ij'p) instead

    Returns:
        LpModel with n Bellman rows and m reduced-cost rows

    Raises:
        DimensionMismatchError: If the instance shapes are inconsistent
    """
    n, M = prob.n, prob.M
    if prob.A.shape != (n, n) or prob.E.shape != (M, n) or prob.B.shape[0] != n:
        raise DimensionMismatchError("Instance shapes do not agree; validate it first")
    if prob.s.size != n or prob.r.size != prob.m:
        raise DimensionMismatchError("Cost vectors do not match the instance dimensions")

    bellman = sp.hstack([sp.csr_array(sp.identity(n)) - prob.A.T, prob.E.T], format="csr")
    bellman_names = [f"bell_{k + 1}" for k in range(n)]
    rows = _rows_from(bellman, prob.s, bellman_names)

    if prob.m:
        sign = 1.0 if literal_sign else -1.0
        reduced = sp.hstack([sign * prob.B.T, -partition_indicator(prob)], format="csr")
        reduced_names = [
            f"red_{i + 1}_{j + 1}"
            for i, size in enumerate(prob.block_sizes)
            for j in range(int(size))
        ]
        rows += _rows_from(reduced, sign * -prob.r, reduced_names)

    labels = [f"p_{k + 1}" for k in range(n)] + [f"z_{i + 1}" for i in range(M)]
    objective = [1.0] * n + [0.0] * M
    logger.debug("built LP with %d variables and %d rows", n + M, len(rows))
    return LpModel(n=n, M=M, objective=objective, rows=rows, labels=labels)
