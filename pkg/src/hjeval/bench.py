"""Dimension-scaling benchmark for single-point evaluations.

Evaluation of either net costs O(m · n) per point with no grid anywhere, so
the mean time per point must grow at most polynomially in the dimension.
The benchmark builds synthetic nets per dimension and times repeated
single-point evaluations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .catalog import ConcaveFn, HalfSquaredNorm, ShiftedNormPlus
from .initialdata import InitialDataNet, norm_hamiltonian_rows
from .lagrangian import LagrangianNet

__all__ = ["BenchRow", "synthetic_net", "run_bench", "bench_csv"]

POINTS_PER_REP = 1000


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    mean_eval_time: float  # seconds per single-point evaluation


def synthetic_net(architecture: str, n: int, m: int, seed: int = 0):
    """Benchmark net: random Lipschitz net for arch1, linf generator for arch2.

    arch2 ignores ``m`` (the generator fixes m = 2n) so that the
    lower-envelope condition holds by construction.
    """
    rng = np.random.default_rng(seed)
    if architecture == "arch1":
        shifts = rng.uniform(-1.0, 1.0, (m, n))
        offsets = rng.uniform(-1.0, 1.0, m)
        return LagrangianNet(ShiftedNormPlus(), shifts, offsets)
    if architecture == "arch2":
        rows, offsets = norm_hamiltonian_rows("linf", n)
        return InitialDataNet(ConcaveFn(HalfSquaredNorm()), rows, offsets)
    raise ValueError(f"unknown architecture {architecture!r}")


def run_bench(architecture: str, dims, m: int, reps: int, seed: int = 0) -> list[BenchRow]:
    """Mean single-point evaluation time per dimension, over reps × 1000 points."""
    if not dims:
        raise ValueError("dims must be nonempty")
    if reps < 1:
        raise ValueError("reps must be at least 1")
    rows = []
    for n in dims:
        net = synthetic_net(architecture, n, m, seed)
        rng = np.random.default_rng(seed + 1)
        pts = rng.uniform(-1.0, 1.0, (POINTS_PER_REP, n))
        for i in range(min(10, POINTS_PER_REP)):  # warm caches before timing
            net.evaluate(pts[i], 1.0)
        elapsed = 0.0
        for _ in range(reps):
            start = time.perf_counter()
            for i in range(POINTS_PER_REP):
                net.evaluate(pts[i], 1.0)
            elapsed += time.perf_counter() - start
        rows.append(BenchRow(n, net.n_branches, elapsed / (reps * POINTS_PER_REP)))
    return rows


def bench_csv(rows: list[BenchRow]) -> str:
    lines = ["n,m,mean_eval_time"]
    lines.extend(f"{r.n},{r.m},{r.mean_eval_time:.9e}" for r in rows)
    return "\n".join(lines) + "\n"
