"""Min-of-branches bookkeeping shared by both solution representations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["EvalResult", "reduce_branches", "reduce_branch_matrix"]


@dataclass(frozen=True)
class EvalResult:
    """Value of a min-of-branches formula with its winning branch.

    ``argmin_index`` is the 1-based index of the winning branch (smallest
    index on ties).  ``gap`` is the runner-up branch value minus the winning
    one (+inf for a single branch); a small gap flags proximity to a kink of
    the solution.
    """

    value: float
    argmin_index: int
    gap: float


def reduce_branches(values: np.ndarray) -> EvalResult:
    """Collapse a vector of branch values into an :class:`EvalResult`."""
    values = np.asarray(values, dtype=float)
    best = int(values.argmin())
    if values.size == 1:
        return EvalResult(float(values[0]), 1, float("inf"))
    second = float(np.partition(values, 1)[1])
    return EvalResult(float(values[best]), best + 1, second - float(values[best]))


def reduce_branch_matrix(matrix: np.ndarray):
    """Row-wise reduction of a (k, m) branch matrix.

    Returns (values, argmin indices, gaps) as length-k arrays; indices are
    1-based with the smallest index winning ties.
    """
    matrix = np.asarray(matrix, dtype=float)
    best = matrix.argmin(axis=1)
    values = matrix[np.arange(matrix.shape[0]), best]
    if matrix.shape[1] == 1:
        gaps = np.full(matrix.shape[0], np.inf)
    else:
        two = np.partition(matrix, 1, axis=1)[:, :2]
        gaps = two[:, 1] - two[:, 0]
    return values, best + 1, gaps
