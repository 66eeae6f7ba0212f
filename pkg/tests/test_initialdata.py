import math

import numpy as np
import pytest

from hjeval.catalog import ConcaveFn, HalfSquaredNorm, MaxAffine, PNorm
from hjeval.initialdata import InitialDataNet, norm_hamiltonian_rows
from hjeval.simplex import EnvelopeViolationError
from hjeval.presets import (
    concave_quadratic_net_1d,
    concave_quadratic_net_10d,
    l1_hamiltonian_net,
    linf_hamiltonian_net,
)


def test_evaluate_concave_quadratic_net():
    net = concave_quadratic_net_1d()
    res = net.evaluate([0.0], 1.0)
    # Branches by hand: {J(2) + 0.5, J(0) - 5, J(-2) + 1} = {-1.5, -5, -1}.
    assert res.value == pytest.approx(-5.0, abs=1e-15)
    assert res.argmin_index == 2
    res = net.evaluate([1.0], 2.0)
    # Branches: {-11.5, -10.5, -2.5}.
    assert res.value == pytest.approx(-11.5, abs=1e-15)
    assert res.argmin_index == 1


def test_time_zero_reduces_to_initial_data():
    for net in (concave_quadratic_net_1d(), concave_quadratic_net_10d()):
        rng = np.random.default_rng(0)
        for _ in range(20):
            x = rng.uniform(-4, 4, net.dimension)
            res = net.evaluate(x, 0.0)
            assert res.value == pytest.approx(net.initial_data(x), abs=0)
            assert res.gap == 0.0  # all branches coincide at t = 0
            assert res.argmin_index == 1


def test_negative_time_rejected():
    with pytest.raises(ValueError, match="nonnegative"):
        concave_quadratic_net_1d().evaluate([0.0], -0.5)


def test_hamiltonian_is_max_affine():
    net = concave_quadratic_net_1d()
    ham = net.hamiltonian()
    assert isinstance(ham, MaxAffine)
    assert ham(0.0) == 5.0  # max{-0.5, 5, -1}
    assert ham(1.0) == 5.0  # max{-2.5, 5, 1}
    linf = linf_hamiltonian_net(2)
    assert linf.hamiltonian()([3.0, -1.0]) == 3.0


def test_hamiltonian_conjugate_vertices_and_hull():
    net = concave_quadratic_net_1d()
    assert net.hamiltonian_conjugate([-2.0]).value == pytest.approx(0.5, abs=1e-10)
    sol = net.hamiltonian_conjugate([1.0])
    assert sol.value == pytest.approx(-2.0, abs=1e-10)
    np.testing.assert_allclose(sol.weights, [0.0, 0.5, 0.5], atol=1e-10)
    outside = net.hamiltonian_conjugate([3.0])
    assert outside.value == float("inf")
    assert outside.weights is None


def test_envelope_gate_rejects_bad_offsets():
    with pytest.raises(EnvelopeViolationError) as info:
        InitialDataNet(
            ConcaveFn(HalfSquaredNorm()),
            rows=[[-2.0], [0.0], [2.0]],
            offsets=[0.5, 5.0, 1.0],
        )
    assert info.value.certificate.index == 2
    # Chord of rows 1 and 3 sits at 0.75 over v = 0, far below 5.
    assert info.value.certificate.envelope_value == pytest.approx(0.75, abs=1e-9)


def test_certificate_stored_on_accepted_net():
    net = concave_quadratic_net_1d()
    assert net.certificate.holds
    assert net.lipschitz_initial_data is False  # quadratic data is not Lipschitz
    lipschitz_net = InitialDataNet(ConcaveFn(PNorm(2)), [[0.0]], [0.0])
    assert lipschitz_net.lipschitz_initial_data is True


def test_rejects_bad_parameters():
    j = ConcaveFn(HalfSquaredNorm())
    with pytest.raises(ValueError, match="equal length"):
        InitialDataNet(j, [[0.0]], [0.0, 1.0])
    with pytest.raises(ValueError, match="finite"):
        InitialDataNet(j, [[np.nan]], [0.0])
    with pytest.raises(TypeError):
        InitialDataNet(HalfSquaredNorm(), [[0.0]], [0.0])


def test_norm_rows_l1():
    rows, offsets = norm_hamiltonian_rows("l1", 5)
    assert rows.shape == (32, 5)
    assert (offsets == 0).all()
    np.testing.assert_array_equal(rows[0], [-1.0] * 5)
    np.testing.assert_array_equal(rows[-1], [1.0] * 5)
    assert {tuple(np.abs(r)) for r in rows} == {(1.0,) * 5}
    with pytest.raises(ValueError, match="n > 20"):
        norm_hamiltonian_rows("l1", 21)


def test_norm_rows_linf():
    rows, offsets = norm_hamiltonian_rows("linf", 5)
    assert rows.shape == (10, 5)
    assert (offsets == 0).all()
    np.testing.assert_array_equal(rows[0], [1.0, 0, 0, 0, 0])
    np.testing.assert_array_equal(rows[1], [-1.0, 0, 0, 0, 0])
    np.testing.assert_array_equal(rows[8], [0, 0, 0, 0, 1.0])


def test_norm_rows_coincide_in_1d():
    l1_rows, _ = norm_hamiltonian_rows("l1", 1)
    linf_rows, _ = norm_hamiltonian_rows("linf", 1)
    assert {tuple(r) for r in l1_rows} == {tuple(r) for r in linf_rows} == {(-1.0,), (1.0,)}
    with pytest.raises(ValueError, match="unknown norm kind"):
        norm_hamiltonian_rows("l2", 3)


def test_norm_hamiltonians_evaluate_to_norms():
    rng = np.random.default_rng(12)
    pts = rng.uniform(-5, 5, (200, 5))
    h1 = l1_hamiltonian_net(5).hamiltonian()
    hinf = linf_hamiltonian_net(5).hamiltonian()
    np.testing.assert_allclose(h1(pts), np.abs(pts).sum(axis=1), atol=1e-12)
    np.testing.assert_allclose(hinf(pts), np.abs(pts).max(axis=1), atol=1e-12)


def test_concavity_in_space():
    rng = np.random.default_rng(21)
    net = concave_quadratic_net_1d()
    for _ in range(200):
        x = rng.uniform(-4, 4, 1)
        y = rng.uniform(-4, 4, 1)
        lam = rng.uniform()
        t = rng.uniform(0, 3)
        mid = net.evaluate(lam * x + (1 - lam) * y, t).value
        assert mid >= lam * net.evaluate(x, t).value + (1 - lam) * net.evaluate(y, t).value - 1e-9


def test_grid_evaluation_matches_pointwise():
    net = concave_quadratic_net_10d()
    rng = np.random.default_rng(3)
    pts = rng.uniform(-4, 4, (20, 10))
    values, argmins, gaps = net.evaluate_grid(pts, 1.3)
    for i, x in enumerate(pts):
        res = net.evaluate(x, 1.3)
        assert values[i] == res.value
        assert argmins[i] == res.argmin_index
        assert gaps[i] == res.gap


def test_fenchel_young_between_hamiltonian_and_conjugate():
    net = concave_quadratic_net_1d()
    ham = net.hamiltonian()
    rng = np.random.default_rng(31)
    for _ in range(100):
        p = rng.uniform(-5, 5, 1)
        v = rng.uniform(-2, 2, 1)
        conj = net.hamiltonian_conjugate(v).value
        assert ham(p) + conj >= float(p @ v) - 1e-9
    # Equality at a vertex with a supergradient selecting that row.
    for k, (v, b) in enumerate(zip(net.rows, net.offsets)):
        p = np.array([math.copysign(6.0, v[0] if v[0] else 1.0)])
        if net.hamiltonian()(p) == float(p @ v) - b:
            conj = net.hamiltonian_conjugate(v).value
            assert ham(p) + conj == pytest.approx(float(p @ v), abs=1e-6)
