"""Bellman operator for linear cost functions J(x) = p'x"""
from typing import Any

import numpy as np

from core.exceptions import DimensionMismatchError
from models.problem import ProblemData

# Cost vectors are plain float64 arrays of length n
CostVector = np.ndarray


def as_cost_vector(prob: ProblemData, p: Any) -> CostVector:
    """Coerce p to a float vector and check its length against the instance"""
    vector = np.asarray(p, dtype=np.float64).reshape(-1)
    if vector.size != prob.n:
        raise DimensionMismatchError(f"Cost vector has length {vector.size}, expected {prob.n}")
    return vector


def reduced_costs(prob: ProblemData, p: Any) -> np.ndarray:
    """Stacked reduced costs r + B'p (partition i occupies its block of columns)"""
    p = as_cost_vector(prob, p)
    return prob.r + prob.B.T @ p


def partition_minima(prob: ProblemData, stacked: np.ndarray) -> np.ndarray:
    """
    Per-partition min{v_i, 0} of a stacked vector

    Empty partitions yield 0.
    """
    minima = np.zeros(prob.M)
    nonempty = prob.block_sizes > 0
    if stacked.size and nonempty.any():
        block_mins = np.minimum.reduceat(stacked, prob.block_offsets[nonempty])
        minima[nonempty] = np.minimum(block_mins, 0.0)
    return minima


def split_blocks(prob: ProblemData, stacked: np.ndarray) -> list:
    """Cut a stacked input-space vector into its partitions"""
    return [
        stacked[offset:offset + size]
        for offset, size in zip(prob.block_offsets, prob.block_sizes)
    ]


def bellman_apply(prob: ProblemData, p: Any) -> CostVector:
    """
    One application of the Bellman operator

        T(p) = s + A'p + sum_i min{r_i + B_i'p, 0} E_i

    Args:
        prob: Problem instance
        p: Cost vector of length n

    Returns:
        T(p)

    Raises:
        DimensionMismatchError: If p does not have length n
    """
    p = as_cost_vector(prob, p)
    q = partition_minima(prob, prob.r + prob.B.T @ p)
    return prob.s + prob.A.T @ p + prob.E.T @ q


def homogeneous_apply(prob: ProblemData, d: Any) -> np.ndarray:
    """The operator with zero state and input costs, A'd + sum_i min{B_i'd, 0} E_i"""
    d = as_cost_vector(prob, d)
    q = partition_minima(prob, prob.B.T @ d)
    return prob.A.T @ d + prob.E.T @ q


def bellman_residual(prob: ProblemData, p: Any) -> float:
    """Sup-norm defect ||T(p) - p||"""
    p = as_cost_vector(prob, p)
    return float(np.max(np.abs(bellman_apply(prob, p) - p)))
