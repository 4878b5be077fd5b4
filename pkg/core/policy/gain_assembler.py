"""Builds the sparse feedback gain u = K x from a policy"""
import numpy as np
import scipy.sparse as sp

from core.exceptions import DimensionMismatchError
from models.problem import ProblemData
from .policy_extractor import Policy


def assemble_gain(prob: ProblemData, pol: Policy) -> sp.csr_array:
    """
    Stack the partition gains K_i into the m x n gain K

    Row offset_i + j of K equals E_i' when partition i selects input j;
    every other row is zero.

    Raises:
        DimensionMismatchError: If the policy does not fit the instance
    """
    if len(pol.choices) != prob.M:
        raise DimensionMismatchError(
            f"Policy has {len(pol.choices)} partitions, instance has {prob.M}"
        )
    E = prob.E.tocsr()
    rows, cols, vals = [], [], []
    for i, choice in enumerate(pol.choices):
        if choice is None:
            continue
        if not 0 <= choice < prob.block_sizes[i]:
            raise DimensionMismatchError(
                f"Partition {i} selects input {choice} of {prob.block_sizes[i]}"
            )
        start, end = E.indptr[i], E.indptr[i + 1]
        row = int(prob.block_offsets[i] + choice)
        rows.extend([row] * (end - start))
        cols.extend(E.indices[start:end].tolist())
        vals.extend(E.data[start:end].tolist())
    return sp.csr_array(
        sp.coo_array(
            (
                np.array(vals, dtype=np.float64),
                (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64)),
            ),
            shape=(prob.m, prob.n),
        )
    )


def closed_loop_matrix(prob: ProblemData, gain: sp.csr_array) -> np.ndarray:
    """A + B K"""
    return (prob.A + prob.B @ gain).toarray()
