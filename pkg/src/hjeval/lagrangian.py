"""Solution net driven by a Lipschitz Lagrangian (first representation).

The net evaluates, without any grid,

    value(x, t) = min_i { t L((x - u_i) / t) + a_i },          t > 0,

for a convex, globally Lipschitz activation L and branch parameters
(u_i, a_i).  Its t -> 0 limit is taken with the recession function of L:

    initial_value(x) = min_i { L_rec(x - u_i) + a_i },

and the Hamilton-Jacobi equation it solves has Hamiltonian H equal to the
convex conjugate of L (finite only on a bounded set when L is Lipschitz).
Evaluation cost is O(m · cost(L)) per point, independent of any mesh.
"""

from __future__ import annotations

import numpy as np

from .branches import EvalResult, reduce_branch_matrix, reduce_branches
from .catalog import ConvexFn

__all__ = ["LagrangianNet"]


def _as_params(shifts, offsets, fn_dim):
    shifts = np.atleast_2d(np.asarray(shifts, dtype=float))
    offsets = np.asarray(offsets, dtype=float).reshape(-1)
    if shifts.shape[0] < 1:
        raise ValueError("need at least one branch")
    if shifts.shape[0] != offsets.shape[0]:
        raise ValueError("shifts and offsets must have equal length")
    if not (np.isfinite(shifts).all() and np.isfinite(offsets).all()):
        raise ValueError("branch parameters must be finite")
    if fn_dim is not None and shifts.shape[1] != fn_dim:
        raise ValueError(
            f"activation is defined on R^{fn_dim} but branch points live in R^{shifts.shape[1]}"
        )
    return shifts, offsets


class LagrangianNet:
    """Exact solution evaluator parameterized by (L, {(u_i, a_i)})."""

    def __init__(self, lagrangian: ConvexFn, shifts, offsets):
        if not lagrangian.finite_everywhere:
            raise ValueError("the Lagrangian must be finite on all of R^n")
        if not lagrangian.uniformly_lipschitz:
            raise ValueError(
                "the Lagrangian must be globally Lipschitz; "
                "superlinear activations are not admissible for this representation"
            )
        self.lagrangian = lagrangian
        self.shifts, self.offsets = _as_params(shifts, offsets, lagrangian.dim)

    @property
    def dimension(self) -> int:
        return self.shifts.shape[1]

    @property
    def n_branches(self) -> int:
        return self.shifts.shape[0]

    def _check_point(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.size != self.dimension:
            raise ValueError(f"point has dimension {x.size}, net expects {self.dimension}")
        return x

    def branch_values(self, x, t: float) -> np.ndarray:
        """All m branch values t L((x - u_i)/t) + a_i at one point."""
        x = self._check_point(x)
        return t * self.lagrangian((x - self.shifts) / t) + self.offsets

    def evaluate(self, x, t: float) -> EvalResult:
        """Solution value at time t > 0."""
        if t <= 0:
            raise ValueError("t must be positive; use initial_value() for t = 0")
        return reduce_branches(self.branch_values(x, t))

    def initial_value(self, x) -> EvalResult:
        """The t = 0 data: min over branches of the recession of L, shifted."""
        x = self._check_point(x)
        vals = self.lagrangian.recession(x - self.shifts) + self.offsets
        return reduce_branches(vals)

    def evaluate_grid(self, points, t: float):
        """Vectorized :meth:`evaluate` over (k, n) row points."""
        if t <= 0:
            raise ValueError("t must be positive; use initial_grid() for t = 0")
        points = np.atleast_2d(np.asarray(points, dtype=float))
        cols = [
            t * self.lagrangian((points - u) / t) + a
            for u, a in zip(self.shifts, self.offsets)
        ]
        return reduce_branch_matrix(np.stack(cols, axis=1))

    def initial_grid(self, points):
        """Vectorized :meth:`initial_value` over (k, n) row points."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        cols = [
            self.lagrangian.recession(points - u) + a
            for u, a in zip(self.shifts, self.offsets)
        ]
        return reduce_branch_matrix(np.stack(cols, axis=1))

    def solution_grid(self, points, t: float):
        """Grid evaluation dispatching t = 0 to the recession formula."""
        if t < 0:
            raise ValueError("t must be nonnegative")
        if t == 0:
            return self.initial_grid(points)
        return self.evaluate_grid(points, t)

    def initial_values(self, points) -> np.ndarray:
        """Initial-data values only, for use as an oracle integrand."""
        return self.initial_grid(points)[0]

    def hamiltonian(self) -> ConvexFn:
        """The Hamiltonian of the solved equation: the conjugate of L."""
        conj = self.lagrangian.conjugate()
        if conj is None:
            raise ValueError(
                "no closed-form conjugate for this Lagrangian; "
                "grid_conjugate() can verify values pointwise"
            )
        return conj

    def __repr__(self):
        return (
            f"LagrangianNet({self.lagrangian!r}, m={self.n_branches}, "
            f"dim={self.dimension})"
        )
