import numpy as np
import pytest

from hjeval.catalog import (
    ClippedQuadratic1D,
    HalfSquaredNorm,
    IntervalQuadratic1D,
    MaxAffine,
    PNorm,
    ShiftedNormPlus,
)
from hjeval.numeric import (
    grid_conjugate,
    grid_inf_convolution,
    grid_points,
    recession_quotient,
)


def test_grid_conjugate_half_squared_norm():
    val = grid_conjugate(HalfSquaredNorm(), [1.0], 10.0, 100001)
    assert val == pytest.approx(0.5, abs=1e-4)


def test_grid_conjugate_clipped_quadratic():
    # Closed-form conjugate is p^2/2 on [-1, 2]; at p = 1 that is 0.5.
    val = grid_conjugate(ClippedQuadratic1D(), [1.0], 10.0, 100001)
    assert val == pytest.approx(0.5, abs=1e-4)


def test_grid_conjugate_norm_inside_ball():
    val = grid_conjugate(PNorm(2), [0.5], 10.0, 100001)
    assert val == pytest.approx(0.0, abs=1e-9)


def test_grid_conjugate_never_exceeds_analytic():
    rng = np.random.default_rng(5)
    cases = [
        (HalfSquaredNorm(), 1, 3.0),
        (ClippedQuadratic1D(), 1, 3.0),
        (ShiftedNormPlus(), 1, 3.0),
        (PNorm(2), 1, 3.0),
        (ShiftedNormPlus(), 2, 3.0),
        (PNorm(2), 2, 3.0),
    ]
    for f, n, spread in cases:
        conj = f.conjugate()
        for _ in range(25):
            p = rng.uniform(-spread, spread, n)
            grid = grid_conjugate(f, p, 8.0, 2001 if n == 2 else 100001)
            exact = conj(p)
            assert grid <= exact + 1e-4
            if n == 1 and np.isfinite(exact):
                # 1-D grids are fine enough to certify tightness whenever the
                # maximizer lies inside the box.
                assert grid == pytest.approx(exact, abs=1e-4)


def test_grid_conjugate_requires_finite_function():
    with pytest.raises(ValueError, match="finite"):
        grid_conjugate(IntervalQuadratic1D(), [1.0], 5.0, 101)


def test_grid_inf_convolution_norm_with_itself():
    f = PNorm(2)
    val = grid_inf_convolution(f, f, [1.0], 5.0, 10001)
    assert val == pytest.approx(1.0, abs=1e-3)


def test_grid_inf_convolution_half_squared():
    # x^2/2 convolved with itself is x^2/4: split the move evenly.
    g = HalfSquaredNorm()
    val = grid_inf_convolution(g, g, [2.0], 10.0, 10001)
    assert val == pytest.approx(1.0, abs=1e-3)


def test_grid_inf_convolution_with_recession_at_zero():
    L = ClippedQuadratic1D()
    val = grid_inf_convolution(L, L.recession, [0.0], 5.0, 10001)
    assert val == pytest.approx(0.0, abs=1e-3)


def test_grid_inf_convolution_all_infinite():
    h = IntervalQuadratic1D()
    assert grid_inf_convolution(h, h, [50.0], 1.0, 101) == float("inf")


@pytest.mark.parametrize("n", [1, 2])
def test_inf_convolution_with_recession_recovers_function(n):
    # Convolving a closed convex function with its own recession function
    # changes nothing; checked on a sample of the catalog.
    rng = np.random.default_rng(42)
    fns = [PNorm(1), PNorm(2), MaxAffine(rng.uniform(-2, 2, (3, n)), rng.uniform(-1, 1, 3))]
    if n == 1:
        fns.append(ClippedQuadratic1D())
    pts_per_axis = 8001 if n == 1 else 201
    for f in fns:
        for _ in range(10):
            x = rng.uniform(-3, 3, n)
            val = grid_inf_convolution(f, f.recession, x, 4.0, pts_per_axis)
            assert val == pytest.approx(f(x), abs=1e-3)


def test_recession_quotient_matches_analytic():
    L = ClippedQuadratic1D()
    assert recession_quotient(L, [1.0]) == pytest.approx(2.0, abs=1e-6)
    assert recession_quotient(L, [-1.0]) == pytest.approx(1.0, abs=1e-6)
    s = ShiftedNormPlus()
    assert recession_quotient(s, [3.0, 4.0]) == pytest.approx(5.0, abs=1e-6)
    f = MaxAffine([[1.0], [-2.0]], [0.3, -0.7])
    assert recession_quotient(f, [1.5]) == pytest.approx(f.recession([1.5]), abs=1e-6)
    assert recession_quotient(PNorm(2), [0.6, 0.8]) == pytest.approx(1.0, abs=1e-12)


def test_recession_quotient_flags_superlinear_growth():
    g = HalfSquaredNorm()
    assert recession_quotient(g, [50.0]) == float("inf")
    # Moderate directions stay under the blow-up threshold: the quotient is
    # then only a finite lower estimate of the true +inf recession value.
    finite_estimate = recession_quotient(g, [1.0])
    assert np.isfinite(finite_estimate) and finite_estimate > 1e8


def test_grid_refuses_high_dimension_and_bad_sizes():
    with pytest.raises(ValueError, match="n=4"):
        grid_points(np.zeros(4), 1.0, 11)
    with pytest.raises(ValueError, match="at least 3"):
        grid_points(np.zeros(1), 1.0, 2)
    with pytest.raises(ValueError, match="cap"):
        grid_points(np.zeros(3), 1.0, 2001)
    with pytest.raises(ValueError, match="n=4"):
        grid_inf_convolution(PNorm(2), PNorm(2), np.zeros(4), 1.0, 11)


def test_grid_contains_center_for_odd_counts():
    pts = grid_points(np.array([0.3, -1.7]), 2.0, 11)
    assert any(np.allclose(p, [0.3, -1.7], atol=1e-12) for p in pts)
    assert pts.shape == (121, 2)
