"""Desk-scale ground truth for the grid-free evaluators.

``lax_oleinik_bruteforce`` minimizes the variational integrand
J(u) + t H*((x - u)/t) over a dense u-grid centered at the query point.  It
is a restricted minimum, hence always an upper bound on the true infimum,
and converges to it as the grid refines.  Because the net evaluators compute
the exact infimum, oracle - evaluator is nonnegative up to rounding, and
small oracle gaps certify the representation.

``hj_residual`` checks the equation ∂_t S + H(∇_x S) = 0 pointwise with
central differences.  Viscosity solutions are nonsmooth, so residuals are
asserted only at screened points: winning-branch gap above a threshold and
activation arguments away from the activation's kink set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .catalog import ensure_extended
from .initialdata import InitialDataNet
from .lagrangian import LagrangianNet
from .numeric import grid_points

__all__ = [
    "ORACLE_TOL",
    "RESIDUAL_TOL",
    "GAP_THRESHOLD",
    "MARGIN_THRESHOLD",
    "OracleConfig",
    "OracleDomainError",
    "lax_oleinik_bruteforce",
    "lax_oleinik_bruteforce_velocity",
    "gradient_fd",
    "hj_residual",
    "hstar_interpolator_1d",
    "screen_point",
    "sample_screened_points",
    "SampleRecord",
    "VerifyReport",
    "verify_report",
]

# Module tolerances for the verification report.
ORACLE_TOL = 2e-3
RESIDUAL_TOL = 1e-3

# Residual screening thresholds: minimum winning-branch gap, and minimum
# distance of the active activation argument from the activation's kink set.
# Chosen so that a central-difference stencil of step 1e-4 never straddles a
# branch switch or a kink.
GAP_THRESHOLD = 0.1
MARGIN_THRESHOLD = 0.05

# Sampling boxes for the verification report (per module invariants).
SAMPLE_X_HALFWIDTH = 4.0
T_RANGE_LAGRANGIAN = (0.1, 3.0)
T_RANGE_INITIALDATA = (0.0, 3.0)


@dataclass(frozen=True)
class OracleConfig:
    """Grid and finite-difference settings for the oracle.

    ``pts_per_axis`` must be odd so the grid contains its center; grids are
    refused above three dimensions at the call sites.
    """

    search_box_halfwidth: float
    pts_per_axis: int
    fd_step: float = 1e-4

    def __post_init__(self):
        if self.search_box_halfwidth <= 0:
            raise ValueError("search_box_halfwidth must be positive")
        if self.pts_per_axis < 3 or self.pts_per_axis % 2 == 0:
            raise ValueError("pts_per_axis must be odd and at least 3")
        if self.fd_step <= 0:
            raise ValueError("fd_step must be positive")


class OracleDomainError(RuntimeError):
    """Every grid term was +inf: the search box misses x - t·dom H*."""


def lax_oleinik_bruteforce(initial_eval, hstar_eval, x, t: float, cfg: OracleConfig) -> float:
    """Brute-force variational minimum min_u { J(u) + t H*((x - u)/t) }.

    ``initial_eval`` and ``hstar_eval`` take (k, n) row points and return
    length-k arrays (values in R ∪ {+inf}); +inf terms are skipped.  The
    u-grid is centered at x with halfwidth ``cfg.search_box_halfwidth``.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    x = np.asarray(x, dtype=float).reshape(-1)
    u = grid_points(x, cfg.search_box_halfwidth, cfg.pts_per_axis)
    vals = ensure_extended(initial_eval(u)) + t * ensure_extended(hstar_eval((x - u) / t))
    finite = np.isfinite(vals)
    if not finite.any():
        raise OracleDomainError(
            "all grid terms are +inf: the search box does not intersect x - t·dom H*"
        )
    return float(vals[finite].min())


def lax_oleinik_bruteforce_velocity(
    initial_eval, hstar_eval, x, t: float, box_lo, box_hi, pts_per_axis: int
) -> float:
    """Velocity-form variational minimum min_v { J(x - t v) + t H*(v) }.

    The v-grid spans the fixed box [box_lo, box_hi] per axis, normally the
    hull of the branch velocities (the conjugate's domain), so that the
    candidate minimizing velocities are grid nodes; t = 0 is allowed and
    reduces every term to J(x).  Complements :func:`lax_oleinik_bruteforce`
    for nets whose conjugate Hamiltonian has a small bounded domain.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    x = np.asarray(x, dtype=float).reshape(-1)
    n = x.size
    if n > 3:
        raise ValueError("grid search refused for n > 3")
    lo = np.broadcast_to(np.asarray(box_lo, dtype=float), (n,))
    hi = np.broadcast_to(np.asarray(box_hi, dtype=float), (n,))
    if pts_per_axis < 3:
        raise ValueError("pts_per_axis must be at least 3")
    axes = [np.linspace(lo[j], hi[j], pts_per_axis) for j in range(n)]
    mesh = np.meshgrid(*axes, indexing="ij")
    v = np.stack([m.ravel() for m in mesh], axis=1)
    vals = ensure_extended(initial_eval(x - t * v)) + t * ensure_extended(hstar_eval(v))
    finite = np.isfinite(vals)
    if not finite.any():
        raise OracleDomainError("all grid terms are +inf: the box misses dom H*")
    return float(vals[finite].min())


def gradient_fd(solution_eval, x, t: float, h: float):
    """Central-difference gradient of S(x, t): returns (dS/dt, ∇_x S).

    ``solution_eval`` maps (point, time) to a float; requires t - h > 0.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    if t - h <= 0:
        raise ValueError("need t - h > 0 for the centered time difference")
    x = np.asarray(x, dtype=float).reshape(-1)
    dt = (solution_eval(x, t + h) - solution_eval(x, t - h)) / (2 * h)
    dx = np.empty_like(x)
    for j in range(x.size):
        step = np.zeros_like(x)
        step[j] = h
        dx[j] = (solution_eval(x + step, t) - solution_eval(x - step, t)) / (2 * h)
    return float(dt), dx


def hj_residual(solution_eval, hamiltonian_eval, x, t: float, h: float) -> float:
    """|∂_t S + H(∇_x S)| by central differences.

    Returns +inf when H(∇_x S) = +inf, i.e. the numerical gradient left the
    Hamiltonian's domain; at unscreened points that flags a kink, not a bug.
    """
    dt, dx = gradient_fd(solution_eval, x, t, h)
    h_val = float(hamiltonian_eval(dx))
    if np.isinf(h_val):
        return float("inf")
    return abs(dt + h_val)


def hstar_interpolator_1d(net: InitialDataNet):
    """Exact vectorized conjugate-Hamiltonian evaluator for a 1-D net.

    The conjugate of a max-affine Hamiltonian is piecewise linear with all
    kinks among the branch velocities, so interpolating the simplex-LP
    values at those nodes reproduces it exactly on the hull and +inf
    outside.  Cross-checked against per-point LP solves in the test suite.
    """
    if net.dimension != 1:
        raise ValueError("interpolator only applies to one-dimensional nets")
    nodes = np.unique(net.rows[:, 0])
    values = np.array([net.hamiltonian_conjugate([v]).value for v in nodes])
    lo, hi = nodes[0], nodes[-1]

    def hstar(points):
        v = np.atleast_2d(np.asarray(points, dtype=float))[:, 0]
        out = np.interp(v, nodes, values)
        return np.where((v >= lo) & (v <= hi), out, np.inf)

    return hstar


def _active_margin(net, x, t: float, argmin_index: int) -> float:
    """Distance of the winning branch's activation argument from kinks."""
    i = argmin_index - 1
    if isinstance(net, LagrangianNet):
        z = (np.asarray(x, dtype=float) - net.shifts[i]) / t
        return net.lagrangian.smoothness_margin(z)
    z = np.asarray(x, dtype=float) - t * net.rows[i]
    return net.initial_data.smoothness_margin(z)


def screen_point(net, x, t: float, fd_step: float = 1e-4):
    """Decide whether (x, t) is safe for a pointwise residual assertion.

    Requires a winning-branch gap above ``GAP_THRESHOLD``, an activation
    argument at least ``MARGIN_THRESHOLD`` from the activation's kink set,
    and room for the centered time stencil.  Returns (accepted, EvalResult).
    """
    result = net.evaluate(x, t)
    if t <= 2 * fd_step:
        return False, result
    if not result.gap > GAP_THRESHOLD:
        return False, result
    if not _active_margin(net, x, t, result.argmin_index) > MARGIN_THRESHOLD:
        return False, result
    return True, result


def _t_range(net):
    return T_RANGE_LAGRANGIAN if isinstance(net, LagrangianNet) else T_RANGE_INITIALDATA


def _solution_eval(net):
    return lambda x, t: net.evaluate(x, t).value


def _hamiltonian_eval(net):
    ham = net.hamiltonian()
    return lambda p: ham(p)


def _hstar_lp_eval(net: InitialDataNet):
    """Per-point simplex-LP conjugate evaluator (slow; for n >= 2 nets)."""

    def hstar(points):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return np.array([net.hamiltonian_conjugate(p).value for p in pts])

    return hstar


def _oracle_integrands(net):
    """(J, H*) evaluators for the brute-force oracle, matching the net."""
    if isinstance(net, LagrangianNet):
        # H = L*, and L is closed, so H* is L itself.
        return net.initial_values, net.lagrangian
    if net.dimension == 1:
        return net.initial_values, hstar_interpolator_1d(net)
    return net.initial_values, _hstar_lp_eval(net)


def sample_screened_points(net, count: int, seed: int, fd_step: float = 1e-4):
    """Seeded rejection sampler yielding exactly ``count`` screened points."""
    rng = np.random.default_rng(seed)
    lo, hi = _t_range(net)
    accepted = []
    attempts = 0
    while len(accepted) < count:
        if attempts > 1000 * max(count, 1):
            raise RuntimeError("rejection sampling stalled; screening too strict for this net")
        x = rng.uniform(-SAMPLE_X_HALFWIDTH, SAMPLE_X_HALFWIDTH, net.dimension)
        t = rng.uniform(lo, hi)
        attempts += 1
        ok, _ = screen_point(net, x, t, fd_step)
        if ok:
            accepted.append((x, float(t)))
    return accepted


@dataclass(frozen=True)
class SampleRecord:
    index: int
    x: np.ndarray
    t: float
    oracle_gap: float | None
    residual: float | None
    screened: bool


@dataclass
class VerifyReport:
    """Seeded verification run: oracle gaps plus screened PDE residuals."""

    label: str
    dimension: int
    samples: int
    seed: int
    oracle_checked: bool
    records: list[SampleRecord] = field(default_factory=list)
    oracle_tolerance: float = ORACLE_TOL
    residual_tolerance: float = RESIDUAL_TOL

    def _oracle_gaps(self):
        return [r.oracle_gap for r in self.records if r.oracle_gap is not None]

    def _screened_residuals(self):
        return [r.residual for r in self.records if r.screened and r.residual is not None]

    @property
    def max_oracle_gap(self) -> float:
        gaps = self._oracle_gaps()
        return max(gaps) if gaps else 0.0

    @property
    def mean_oracle_gap(self) -> float:
        gaps = self._oracle_gaps()
        return float(np.mean(gaps)) if gaps else 0.0

    @property
    def screened_count(self) -> int:
        return len(self._screened_residuals())

    @property
    def max_residual(self) -> float:
        res = self._screened_residuals()
        return max(res) if res else 0.0

    @property
    def mean_residual(self) -> float:
        res = self._screened_residuals()
        return float(np.mean(res)) if res else 0.0

    @property
    def passed(self) -> bool:
        ok = True
        if self.oracle_checked:
            ok = ok and self.max_oracle_gap <= self.oracle_tolerance
        ok = ok and self.max_residual <= self.residual_tolerance
        return ok

    def to_kv(self) -> str:
        """Machine-readable serialization: one metric=value per line."""
        items = [
            ("label", self.label),
            ("dimension", self.dimension),
            ("samples", self.samples),
            ("seed", self.seed),
            ("oracle_checked", str(self.oracle_checked).lower()),
            ("max_oracle_gap", repr(self.max_oracle_gap)),
            ("mean_oracle_gap", repr(self.mean_oracle_gap)),
            ("oracle_tolerance", repr(self.oracle_tolerance)),
            ("screened_points", self.screened_count),
            ("max_residual", repr(self.max_residual)),
            ("mean_residual", repr(self.mean_residual)),
            ("residual_tolerance", repr(self.residual_tolerance)),
            ("passed", str(self.passed).lower()),
        ]
        return "".join(f"{k}={v}\n" for k, v in items)

    def to_text(self) -> str:
        lines = [
            f"verification report: {self.label} (dimension {self.dimension})",
            f"  samples={self.samples} seed={self.seed}",
        ]
        if self.oracle_checked:
            lines.append(
                f"  oracle gap: max={self.max_oracle_gap:.3e} "
                f"mean={self.mean_oracle_gap:.3e} (tolerance {self.oracle_tolerance:g})"
            )
        else:
            lines.append("  oracle gap: skipped")
        lines.append(
            f"  residual at {self.screened_count} screened points: "
            f"max={self.max_residual:.3e} mean={self.mean_residual:.3e} "
            f"(tolerance {self.residual_tolerance:g})"
        )
        lines.append(f"  result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def verify_report(
    net,
    samples: int,
    seed: int,
    cfg: OracleConfig,
    *,
    residual_only: bool = False,
    label: str | None = None,
) -> VerifyReport:
    """Seeded verification of a net against the oracle and the PDE.

    Draws ``samples`` points x ~ U[-4, 4]^n with t uniform over the net's
    time range, and records per sample the brute-force oracle gap and the
    centered-difference residual (asserted into pass/fail only where the
    sample passes screening).  Oracle comparison needs n <= 3; pass
    ``residual_only=True`` to skip it in higher dimension.
    """
    if not residual_only and net.dimension > 3:
        raise ValueError(
            "oracle comparison is refused above 3 dimensions; "
            "use residual_only=True for high-dimensional nets"
        )
    if label is None:
        label = "lagrangian" if isinstance(net, LagrangianNet) else "initial-data"
    report = VerifyReport(
        label=label,
        dimension=net.dimension,
        samples=samples,
        seed=seed,
        oracle_checked=not residual_only,
    )
    if samples == 0:
        return report

    rng = np.random.default_rng(seed)
    t_lo, t_hi = _t_range(net)
    if not residual_only:
        initial_eval, hstar_eval = _oracle_integrands(net)
        velocity_form = isinstance(net, InitialDataNet)
        if velocity_form:
            # Velocity grid over the conjugate's domain, so the candidate
            # minimizing velocities (the branch rows) are grid nodes.
            hull_lo = net.rows.min(axis=0)
            hull_hi = net.rows.max(axis=0)
    sol = _solution_eval(net)
    ham = _hamiltonian_eval(net)

    for i in range(samples):
        x = rng.uniform(-SAMPLE_X_HALFWIDTH, SAMPLE_X_HALFWIDTH, net.dimension)
        t = float(rng.uniform(t_lo, t_hi))
        gap = None
        if not residual_only:
            exact = net.evaluate(x, t).value if t > 0 else net.initial_values([x])[0]
            if velocity_form:
                approx = lax_oleinik_bruteforce_velocity(
                    initial_eval, hstar_eval, x, t, hull_lo, hull_hi, cfg.pts_per_axis
                )
            else:
                approx = lax_oleinik_bruteforce(initial_eval, hstar_eval, x, t, cfg)
            gap = abs(approx - exact)
        screened, _ = screen_point(net, x, t, cfg.fd_step)
        residual = hj_residual(sol, ham, x, t, cfg.fd_step) if t > 2 * cfg.fd_step else None
        report.records.append(SampleRecord(i, x, t, gap, residual, screened))
    return report
