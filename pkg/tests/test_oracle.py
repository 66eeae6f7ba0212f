import numpy as np
import pytest

from hjeval.catalog import PNorm
from hjeval.oracle import (
    OracleConfig,
    OracleDomainError,
    gradient_fd,
    hj_residual,
    hstar_interpolator_1d,
    lax_oleinik_bruteforce,
    lax_oleinik_bruteforce_velocity,
    sample_screened_points,
    screen_point,
    verify_report,
)
from hjeval.presets import (
    clipped_quadratic_net_1d,
    concave_quadratic_net_1d,
    shifted_norm_net_10d,
)

CFG = OracleConfig(search_box_halfwidth=20.0, pts_per_axis=40001)


def test_oracle_config_validation():
    with pytest.raises(ValueError, match="odd"):
        OracleConfig(search_box_halfwidth=1.0, pts_per_axis=100)
    with pytest.raises(ValueError, match="positive"):
        OracleConfig(search_box_halfwidth=-1.0, pts_per_axis=101)
    with pytest.raises(ValueError, match="fd_step"):
        OracleConfig(search_box_halfwidth=1.0, pts_per_axis=101, fd_step=0.0)


def test_bruteforce_matches_lagrangian_net():
    net = clipped_quadratic_net_1d()
    val = lax_oleinik_bruteforce(net.initial_values, net.lagrangian, [0.0], 1.0, CFG)
    assert val == pytest.approx(0.0, abs=2e-3)


def test_bruteforce_velocity_matches_initialdata_net():
    net = concave_quadratic_net_1d()
    hstar = hstar_interpolator_1d(net)
    val = lax_oleinik_bruteforce_velocity(
        net.initial_values, hstar, [0.0], 1.0, net.rows.min(axis=0), net.rows.max(axis=0), 4001
    )
    assert val == pytest.approx(-5.0, abs=2e-3)


def test_bruteforce_uform_matches_initialdata_net_at_gridpoint():
    # The winning velocity at (0, 1) is 0, so the minimizing u is the grid
    # center and the position-form oracle is exact here too.
    net = concave_quadratic_net_1d()
    hstar = hstar_interpolator_1d(net)
    val = lax_oleinik_bruteforce(net.initial_values, hstar, [0.0], 1.0, CFG)
    assert val == pytest.approx(-5.0, abs=2e-3)


def test_bruteforce_constant_initial_data():
    # With constant data and a conjugate minimized at 0, the value is the constant.
    const = lambda pts: np.full(len(np.atleast_2d(pts)), 4.25)
    hstar = PNorm(2)  # nonnegative, zero at the origin
    val = lax_oleinik_bruteforce(const, hstar, [1.0], 0.7, OracleConfig(5.0, 2001))
    assert val == pytest.approx(4.25, abs=1e-3)


def test_bruteforce_requires_positive_time():
    net = clipped_quadratic_net_1d()
    with pytest.raises(ValueError, match="positive"):
        lax_oleinik_bruteforce(net.initial_values, net.lagrangian, [0.0], 0.0, CFG)


def test_bruteforce_all_infinite_raises():
    net = clipped_quadratic_net_1d()
    # Conjugate finite only on [5, 6]: reaching it needs u in x - t[5, 6],
    # which lies outside the +-1 search box.
    hstar = lambda v: np.where((v[:, 0] >= 5.0) & (v[:, 0] <= 6.0), 0.0, np.inf)
    with pytest.raises(OracleDomainError):
        lax_oleinik_bruteforce(
            net.initial_values, hstar, [10.0], 1.0, OracleConfig(1.0, 101)
        )


def test_velocity_form_allows_time_zero():
    net = concave_quadratic_net_1d()
    hstar = hstar_interpolator_1d(net)
    val = lax_oleinik_bruteforce_velocity(
        net.initial_values, hstar, [1.5], 0.0, -2.0, 2.0, 4001
    )
    assert val == pytest.approx(net.initial_data([1.5]), abs=1e-12)


def test_grid_refinement_never_increases_minimum():
    net = clipped_quadratic_net_1d()
    rng = np.random.default_rng(5)
    for _ in range(5):
        x = rng.uniform(-4, 4, 1)
        t = rng.uniform(0.5, 2.0)
        coarse = lax_oleinik_bruteforce(
            net.initial_values, net.lagrangian, x, t, OracleConfig(10.0, 101)
        )
        fine = lax_oleinik_bruteforce(
            net.initial_values, net.lagrangian, x, t, OracleConfig(10.0, 201)
        )
        assert fine <= coarse + 1e-12  # nested grids: min over a superset


def test_hstar_interpolator_agrees_with_lp():
    net = concave_quadratic_net_1d()
    hstar = hstar_interpolator_1d(net)
    rng = np.random.default_rng(1)
    vs = rng.uniform(-2.5, 2.5, 200)
    interp = hstar(vs.reshape(-1, 1))
    lp = np.array([net.hamiltonian_conjugate([v]).value for v in vs])
    finite = np.isfinite(lp)
    np.testing.assert_array_equal(np.isfinite(interp), finite)
    np.testing.assert_allclose(interp[finite], lp[finite], atol=1e-9)


def test_gradient_fd_affine_exact():
    c = np.array([2.0, -3.0, 0.5])
    d = 1.25
    eval_fn = lambda x, t: float(c @ x) + d * t
    dt, dx = gradient_fd(eval_fn, [0.3, -0.7, 2.0], 1.0, 1e-4)
    assert dt == pytest.approx(d, abs=1e-10)
    np.testing.assert_allclose(dx, c, atol=1e-10)


def test_gradient_fd_quadratic_second_order():
    eval_fn = lambda x, t: -0.5 * float(x @ x)
    rng = np.random.default_rng(2)
    for h in (1e-2, 1e-3):
        x = rng.uniform(-2, 2, 3)
        _, dx = gradient_fd(eval_fn, x, 1.0, h)
        assert np.abs(dx - (-x)).max() <= 10 * h * h


def test_gradient_fd_time_guard():
    with pytest.raises(ValueError, match="t - h"):
        gradient_fd(lambda x, t: 0.0, [0.0], 5e-5, 1e-4)


def test_residual_zero_at_smooth_point():
    net = concave_quadratic_net_1d()
    sol = lambda x, t: net.evaluate(x, t).value
    res = hj_residual(sol, net.hamiltonian(), [10.0], 1.0, 1e-4)
    assert res <= 1e-6
    dt, dx = gradient_fd(sol, [10.0], 1.0, 1e-4)
    assert dt == pytest.approx(-23.5, abs=1e-6)
    assert dx[0] == pytest.approx(-12.0, abs=1e-6)


def test_gradient_fd_vanishes_at_flat_minimum():
    # Winner branch of the clipped net at (0, 1) is t L(x/t), whose space and
    # time slopes both vanish at the origin.
    net = clipped_quadratic_net_1d()
    sol = lambda x, t: net.evaluate(x, t).value
    dt, dx = gradient_fd(sol, [0.0], 1.0, 1e-4)
    assert abs(dt) <= 1e-6
    assert abs(dx[0]) <= 1e-6


def test_residual_stationary_solution():
    # Constant data with H(0) = 0 is a stationary solution.
    sol = lambda x, t: 4.2
    res = hj_residual(sol, PNorm(2), [0.4, -1.2], 1.0, 1e-4)
    assert res <= 1e-9


def test_residual_flags_domain_escape():
    from hjeval.catalog import UnitBallIndicator

    sol = lambda x, t: 3.0 * float(x.sum())  # gradient (3, 3): far outside the ball
    res = hj_residual(sol, UnitBallIndicator(2), [0.0, 0.0], 1.0, 1e-4)
    assert res == float("inf")


def test_screening_thresholds():
    net = clipped_quadratic_net_1d()
    ok, result = screen_point(net, [0.0], 1.0)
    assert ok and result.gap > 0.1
    # Near the kink of the solution between branches the gap collapses.
    bad_x = None
    for x in np.linspace(-1.4, -0.6, 200):
        r = net.evaluate([x], 1.0)
        if r.gap <= 0.1:
            bad_x = x
            break
    assert bad_x is not None
    ok, _ = screen_point(net, [bad_x], 1.0)
    assert not ok


def test_sample_screened_points_deterministic():
    net = shifted_norm_net_10d()
    a = sample_screened_points(net, 20, seed=3)
    b = sample_screened_points(net, 20, seed=3)
    assert len(a) == len(b) == 20
    for (xa, ta), (xb, tb) in zip(a, b):
        np.testing.assert_array_equal(xa, xb)
        assert ta == tb


def test_verify_report_empty_passes():
    report = verify_report(clipped_quadratic_net_1d(), 0, 0, CFG)
    assert report.passed
    assert report.max_oracle_gap == 0.0
    assert report.screened_count == 0


def test_verify_report_deterministic_and_serializable():
    cfg = OracleConfig(search_box_halfwidth=20.0, pts_per_axis=4001)
    net = concave_quadratic_net_1d()
    rep1 = verify_report(net, 20, 7, cfg)
    rep2 = verify_report(net, 20, 7, cfg)
    assert rep1.to_kv() == rep2.to_kv()
    assert rep1.passed
    kv = dict(line.split("=", 1) for line in rep1.to_kv().strip().splitlines())
    assert kv["samples"] == "20"
    assert kv["passed"] == "true"
    assert float(kv["max_oracle_gap"]) <= 2e-3
    assert "PASS" in rep1.to_text()


def test_verify_report_high_dimension_needs_residual_only():
    net = shifted_norm_net_10d()
    with pytest.raises(ValueError, match="residual_only"):
        verify_report(net, 5, 0, CFG)
    report = verify_report(net, 25, 0, CFG, residual_only=True)
    assert not report.oracle_checked
    assert report.passed
    assert report.max_residual <= 1e-3
