"""Ready-made nets exercising every closed-form activation.

These are the parameter sets shipped as text configs under ``configs/`` and
used as fixtures throughout the test suite; each has hand-checkable branch
values at a few points.
"""

from __future__ import annotations

import numpy as np

from .catalog import ClippedQuadratic1D, ConcaveFn, HalfSquaredNorm, ShiftedNormPlus
from .initialdata import InitialDataNet, norm_hamiltonian_rows
from .lagrangian import LagrangianNet

__all__ = [
    "clipped_quadratic_net_1d",
    "shifted_norm_net_10d",
    "concave_quadratic_net_1d",
    "concave_quadratic_net_10d",
    "l1_hamiltonian_net",
    "linf_hamiltonian_net",
]


def clipped_quadratic_net_1d() -> LagrangianNet:
    """Three branches on R with the clipped-quadratic Lagrangian."""
    return LagrangianNet(
        ClippedQuadratic1D(),
        shifts=[[-2.0], [0.0], [2.0]],
        offsets=[-0.5, 0.0, -1.0],
    )


def _embedded(vectors, n):
    rows = np.zeros((len(vectors), n))
    for i, v in enumerate(vectors):
        rows[i, : len(v)] = v
    return rows


def shifted_norm_net_10d() -> LagrangianNet:
    """Three branches in R^10 with the max(||x|| - 1, 0) Lagrangian."""
    return LagrangianNet(
        ShiftedNormPlus(),
        shifts=_embedded([(-2.0,), (2.0, -2.0, -1.0), (0.0, 2.0)], 10),
        offsets=[-0.5, 0.0, -1.0],
    )


def concave_quadratic_net_1d() -> InitialDataNet:
    """Three branches on R with initial data -x^2/2."""
    return InitialDataNet(
        ConcaveFn(HalfSquaredNorm()),
        rows=[[-2.0], [0.0], [2.0]],
        offsets=[0.5, -5.0, 1.0],
    )


def concave_quadratic_net_10d() -> InitialDataNet:
    """Three branches in R^10 with initial data -||x||^2/2."""
    return InitialDataNet(
        ConcaveFn(HalfSquaredNorm()),
        rows=_embedded([(-2.0,), (2.0, -2.0, -1.0), (0.0, 2.0)], 10),
        offsets=[0.5, -5.0, 1.0],
    )


def l1_hamiltonian_net(n: int = 5) -> InitialDataNet:
    """Net in R^n whose Hamiltonian is the l1 norm (2^n branches)."""
    rows, offsets = norm_hamiltonian_rows("l1", n)
    return InitialDataNet(ConcaveFn(HalfSquaredNorm()), rows, offsets)


def linf_hamiltonian_net(n: int = 5) -> InitialDataNet:
    """Net in R^n whose Hamiltonian is the linf norm (2n branches)."""
    rows, offsets = norm_hamiltonian_rows("linf", n)
    return InitialDataNet(ConcaveFn(HalfSquaredNorm()), rows, offsets)
