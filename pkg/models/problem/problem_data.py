"""Problem data for positive linear systems with coupled input constraints"""
from functools import cached_property
from typing import Any, List, Optional, Sequence

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from core.exceptions import DimensionMismatchError, IndexOutOfRangeError


def as_csr(value: Any, empty_shape: Optional[tuple[int, int]] = None) -> sp.csr_array:
    """
    Coerce a dense or sparse matrix-like value to a float csr_array

    Args:
        value: Nested lists, numpy array or scipy sparse matrix
        empty_shape: Shape given to an empty input such as ``[]``

    Returns:
        Sparse matrix with float64 entries
    """
    if sp.issparse(value):
        matrix = sp.csr_array(value, dtype=np.float64)
    else:
        dense = np.asarray(value, dtype=np.float64)
        if dense.ndim == 1 and dense.size == 0:
            dense = dense.reshape(empty_shape or (0, 0))
        if dense.ndim != 2:
            raise ValueError(f"Expected a 2-D matrix, got shape {dense.shape}")
        matrix = sp.csr_array(dense)
    if not np.all(np.isfinite(matrix.data)):
        raise ValueError("Matrix contains NaN or infinite entries")
    matrix.eliminate_zeros()
    matrix.sort_indices()
    return matrix


def as_vector(value: Any) -> np.ndarray:
    """Coerce a value to a read-only float64 vector"""
    vector = np.array(value, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(vector)):
        raise ValueError("Vector contains NaN or infinite entries")
    vector.flags.writeable = False
    return vector


class ProblemData(BaseModel):
    """
    Instance of the infinite-horizon problem

        minimize   sum_t  s'x(t) + r'u(t)
        subject to x(t+1) = A x(t) + B u(t),  u(t) >= 0,
                   1'u_i(t) <= E_i' x(t)      for every partition i

    Construction only coerces types. Inconsistent shapes and signs are
    reported by the validator rather than raised here.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    M: int
    A: sp.csr_array
    B_blocks: List[sp.csr_array]
    E: sp.csr_array
    s: np.ndarray
    r_blocks: List[np.ndarray]

    @model_validator(mode="before")
    @classmethod
    def _coerce_arrays(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        rows = int(data.get("n", 0))
        if "A" in data:
            data["A"] = as_csr(data["A"], (rows, rows))
        if "E" in data:
            data["E"] = as_csr(data["E"], (int(data.get("M", 0)), rows))
        if "B_blocks" in data:
            data["B_blocks"] = [as_csr(block, (rows, 0)) for block in data["B_blocks"]]
        if "s" in data:
            data["s"] = as_vector(data["s"])
        if "r_blocks" in data:
            data["r_blocks"] = [as_vector(block) for block in data["r_blocks"]]
        return data

    @field_validator("n")
    @classmethod
    def _positive_dimension(cls, value: int) -> int:
        if value < 1:
            raise ValueError("State dimension n must be positive")
        return value

    @field_validator("M")
    @classmethod
    def _nonnegative_partitions(cls, value: int) -> int:
        if value < 0:
            raise ValueError("Partition count M must be nonnegative")
        return value

    @classmethod
    def from_arrays(
        cls,
        A: Any,
        B_blocks: Sequence[Any],
        E: Any,
        s: Any,
        r_blocks: Sequence[Any],
    ) -> "ProblemData":
        """Build an instance inferring n from s and M from the block list"""
        n = int(np.asarray(s).size)
        return cls(
            n=n,
            M=len(B_blocks),
            A=A,
            B_blocks=list(B_blocks),
            E=E,
            s=s,
            r_blocks=list(r_blocks),
        )

    @cached_property
    def block_sizes(self) -> np.ndarray:
        """Input count m_i of every partition"""
        return np.array([block.shape[1] for block in self.B_blocks], dtype=np.int64)

    @cached_property
    def block_offsets(self) -> np.ndarray:
        """Column offset of every partition inside the stacked B"""
        sizes = self.block_sizes
        return np.concatenate(([0], np.cumsum(sizes)[:-1])).astype(np.int64) if sizes.size else sizes

    @property
    def m(self) -> int:
        """Total input dimension"""
        return int(self.block_sizes.sum())

    @cached_property
    def B(self) -> sp.csr_array:
        """Stacked input matrix [B_1 ... B_M]"""
        if not self.B_blocks:
            return sp.csr_array((self.n, 0), dtype=np.float64)
        return sp.csr_array(sp.hstack(self.B_blocks, format="csr"))

    @cached_property
    def r(self) -> np.ndarray:
        """Stacked input cost vector"""
        if not self.r_blocks:
            return np.zeros(0)
        return np.concatenate(self.r_blocks)

    def partition_of_column(self, column: int) -> tuple[int, int]:
        """Map a stacked input column to (partition, index within partition)"""
        offsets = self.block_offsets
        block = int(np.searchsorted(offsets, column, side="right") - 1)
        while self.block_sizes[block] == 0:
            block -= 1
        return block, int(column - offsets[block])


class StateVector(BaseModel):
    """Nonnegative system state"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x: np.ndarray

    @field_validator("x", mode="before")
    @classmethod
    def _nonnegative(cls, value: Any) -> np.ndarray:
        vector = as_vector(value)
        if np.any(vector < 0):
            raise ValueError("State must be elementwise nonnegative")
        return vector

    @classmethod
    def of(cls, values: Any) -> "StateVector":
        if isinstance(values, StateVector):
            return values
        return cls(x=values)


def block_min_or_zero(prob: ProblemData, block_index: int) -> float:
    """
    Smallest entry of B_i, or zero when B_i has no negative entry

    Args:
        prob: Problem instance
        block_index: Partition index i (0-based)

    Returns:
        min{B_i, 0}

    Raises:
        IndexOutOfRangeError: If block_index is not a valid partition
    """
    if not 0 <= block_index < prob.M or block_index >= len(prob.B_blocks):
        raise IndexOutOfRangeError(
            f"Partition index {block_index} outside 0..{prob.M - 1}"
        )
    block = prob.B_blocks[block_index]
    if block.shape[0] == 0 or block.shape[1] == 0 or block.nnz == 0:
        return 0.0
    return float(min(block.data.min(), 0.0))


def padded_block_minima(prob: ProblemData) -> np.ndarray:
    """Vector d of length n with d_i = min{B_i, 0} for i < M and 0 beyond"""
    d = np.zeros(prob.n)
    for i in range(min(prob.M, prob.n)):
        d[i] = block_min_or_zero(prob, i)
    return d


def padded_constraint_matrix(prob: ProblemData) -> np.ndarray:
    """E stacked with zero rows to n rows (truncated when M > n)"""
    dense = prob.E.toarray()
    padded = np.zeros((prob.n, prob.n))
    rows = min(prob.M, prob.n)
    padded[:rows, :] = dense[:rows, :]
    return padded


def lower_bound_matrix(prob: ProblemData) -> np.ndarray:
    """A + diag(d) E_pad, the matrix bounding every admissible successor from below"""
    d = padded_block_minima(prob)
    return prob.A.toarray() + d[:, None] * padded_constraint_matrix(prob)


def _check_state(prob: ProblemData, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if x.size != prob.n:
        raise DimensionMismatchError(f"State has length {x.size}, expected {prob.n}")
    return x


def successor(prob: ProblemData, x: Any, u: Any) -> np.ndarray:
    """Next state A x + B u"""
    x = _check_state(prob, x)
    u = np.asarray(u, dtype=np.float64).reshape(-1)
    if u.size != prob.m:
        raise DimensionMismatchError(f"Input has length {u.size}, expected {prob.m}")
    return prob.A @ x + prob.B @ u


def is_feasible_input(prob: ProblemData, x: Any, u: Any, tol: float = 0.0) -> bool:
    """True when u >= 0 and 1'u_i <= E_i' x for every partition"""
    x = _check_state(prob, x)
    u = np.asarray(u, dtype=np.float64).reshape(-1)
    if u.size != prob.m:
        raise DimensionMismatchError(f"Input has length {u.size}, expected {prob.m}")
    if np.any(u < -tol):
        return False
    budgets = prob.E @ x
    for i, (offset, size) in enumerate(zip(prob.block_offsets, prob.block_sizes)):
        if u[offset:offset + size].sum() > budgets[i] + tol:
            return False
    return True
