"""Dense two-phase simplex for tiny LPs over the unit simplex.

The only shape needed in this package: minimize c·α over weights α in the
unit simplex subject to Σ α_i v_i = target.  Columns number a few dozen, so
a dense tableau with Bland's anti-cycling rule is exact enough, dependency
free, and easy to audit.  Pivot tolerance 1e-10.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PIVOT_TOL",
    "FEASIBILITY_TOL",
    "ENVELOPE_TOL",
    "SimplexSolution",
    "minimize_over_simplex",
    "EnvelopeCertificate",
    "EnvelopeViolationError",
    "lower_envelope_certificate",
]

PIVOT_TOL = 1e-10
FEASIBILITY_TOL = 1e-9
ENVELOPE_TOL = 1e-9


@dataclass
class SimplexSolution:
    """Outcome of a simplex solve: +inf value and no weights when infeasible."""

    value: float
    weights: np.ndarray | None

    @property
    def feasible(self) -> bool:
        return self.weights is not None


def _pivot(tableau, basis, row, col):
    tableau[row] /= tableau[row, col]
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])
    basis[row] = col


def _bland_iterate(tableau, basis, n_cols):
    """Minimize the tableau objective with Bland's rule.

    ``tableau`` rows are the constraints plus a final reduced-cost row; the
    last column is the right-hand side.  Returns 'optimal' or 'unbounded'.
    """
    while True:
        costs = tableau[-1, :n_cols]
        negative = np.nonzero(costs < -PIVOT_TOL)[0]
        if negative.size == 0:
            return "optimal"
        col = negative[0]  # smallest index: Bland's entering rule
        column = tableau[:-1, col]
        rhs = tableau[:-1, -1]
        rows = np.nonzero(column > PIVOT_TOL)[0]
        if rows.size == 0:
            return "unbounded"
        ratios = rhs[rows] / column[rows]
        tied = rows[ratios <= ratios.min() + 1e-12]
        row = min(tied, key=lambda i: basis[i])  # smallest basic index on ties
        _pivot(tableau, basis, row, col)


def minimize_over_simplex(costs, points, target) -> SimplexSolution:
    """Solve min { c·α : α in the unit simplex, Σ α_i v_i = target }.

    ``points`` is the (m, n) array of the v_i as rows.  Returns the exact
    optimum with an optimal α, or ``SimplexSolution(inf, None)`` when the
    target lies outside the convex hull of the points (phase-1 infeasible).
    """
    costs = np.asarray(costs, dtype=float).reshape(-1)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    target = np.asarray(target, dtype=float).reshape(-1)
    m, n = points.shape
    if costs.size != m:
        raise ValueError("costs and points must have equal length")
    if target.size != n:
        raise ValueError("target dimension does not match the points")

    a_mat = np.vstack([points.T, np.ones((1, m))])
    rhs = np.concatenate([target, [1.0]])
    flip = rhs < 0
    a_mat[flip] *= -1.0
    rhs[flip] *= -1.0
    n_rows = n + 1

    # Phase 1: artificial basis, minimize the artificial sum.
    tableau = np.zeros((n_rows + 1, m + n_rows + 1))
    tableau[:n_rows, :m] = a_mat
    tableau[:n_rows, m : m + n_rows] = np.eye(n_rows)
    tableau[:n_rows, -1] = rhs
    tableau[-1, :m] = -a_mat.sum(axis=0)
    tableau[-1, -1] = -rhs.sum()
    basis = list(range(m, m + n_rows))

    if _bland_iterate(tableau, basis, m + n_rows) != "optimal":
        raise RuntimeError("phase-1 objective is bounded below by construction")
    if -tableau[-1, -1] > FEASIBILITY_TOL:
        return SimplexSolution(float("inf"), None)

    # Drive leftover artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(n_rows):
        if basis[i] >= m:
            structural = np.nonzero(np.abs(tableau[i, :m]) > PIVOT_TOL)[0]
            if structural.size == 0:
                continue  # redundant constraint row
            _pivot(tableau, basis, i, structural[0])
        keep.append(i)

    # Phase 2 on structural columns only.
    rows = np.array(keep, dtype=int)
    basis = [basis[i] for i in keep]
    body = tableau[rows][:, list(range(m)) + [m + n_rows]]
    obj = np.concatenate([costs, [0.0]])
    for i, j in enumerate(basis):
        obj -= obj[j] * body[i]
    tableau2 = np.vstack([body, obj])

    if _bland_iterate(tableau2, basis, m) != "optimal":
        raise RuntimeError("LP over the unit simplex cannot be unbounded")

    alpha = np.zeros(m)
    for i, j in enumerate(basis):
        alpha[j] = tableau2[i, -1]
    alpha[np.abs(alpha) < 1e-12] = 0.0
    return SimplexSolution(float(costs @ alpha), alpha)


@dataclass
class EnvelopeCertificate:
    """Whether every (v_i, b_i) lies on the lower convex envelope of the set.

    ``holds`` is equivalent to the existence of a convex function
    interpolating all the pairs.  When violated, ``index`` is the 1-based
    offending row, and ``weights`` are simplex weights with
    Σ w_j v_j = v_index and Σ w_j b_j = envelope_value < b_index - tol.
    """

    holds: bool
    index: int | None = None
    weights: np.ndarray | None = None
    envelope_value: float | None = None


class EnvelopeViolationError(ValueError):
    """A (v_i, b_i) set admits no convex interpolant."""

    def __init__(self, certificate: EnvelopeCertificate):
        self.certificate = certificate
        super().__init__(
            f"no convex interpolant: row {certificate.index} lies strictly above "
            f"the lower convex envelope (envelope value "
            f"{certificate.envelope_value:.12g} at that point)"
        )


def lower_envelope_certificate(points, offsets, *, tol: float = ENVELOPE_TOL) -> EnvelopeCertificate:
    """Check that each point lies on the lower convex envelope of the pair set.

    For every k solves the LP min { Σ α_i b_i : α in the simplex,
    Σ α_i v_i = v_k }; the set passes iff each optimum attains b_k.  The
    first violated row (smallest k) is reported with its minimizing weights.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    offsets = np.asarray(offsets, dtype=float).reshape(-1)
    for k in range(points.shape[0]):
        sol = minimize_over_simplex(offsets, points, points[k])
        if not sol.feasible:
            raise RuntimeError("envelope LP infeasible at one of its own points")
        if sol.value < offsets[k] - tol:
            return EnvelopeCertificate(False, k + 1, sol.weights, sol.value)
    return EnvelopeCertificate(True)
