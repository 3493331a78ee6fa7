"""Pseudo-distances, coverings, twisted decompositions, kernel estimates."""

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from nilharm import czdecomp as cz, funcs, twist as tw
from nilharm.grids import Grid, SampledSymbol


@pytest.fixture(scope="module")
def pd_h3(h3_twist):
    return cz.calibrate(cz.default_pseudo_distance(h3_twist), h3_twist, seed=0)


# -- pseudo-distance -------------------------------------------------------------


def test_h3_gauge_is_sup_norm(h3_twist, pd_h3):
    assert pd_h3.weights == (1, 1)
    pts = np.array([[3.0, -2.0], [0.5, 0.25]])
    assert np.allclose(pd_h3.value(pts), [3.0, 0.5])
    assert pd_h3.quasi_constant <= 2.0 + 1e-9
    assert pd_h3.doubling_constant == 4.0


def test_gauge_axioms_exact(pd_h3):
    assert pd_h3.value(np.zeros((1, 2)))[0] == 0.0
    pts = np.array([[0.7, -1.3], [2.0, 0.4]])
    assert np.array_equal(pd_h3.value(pts), pd_h3.value(-pts))
    assert np.all(pd_h3.value(pts) > 0)


@settings(max_examples=150, deadline=None)
@given(st.tuples(st.floats(-50, 50), st.floats(-50, 50)),
       st.tuples(st.floats(-50, 50), st.floats(-50, 50)))
def test_gauge_quasi_triangle_property(x, y):
    # For the sup-norm gauge on an abelian predual the quasi-triangle
    # constant 2 is exact, not just sampled.
    pdist = cz.PseudoDistance(weights=(1, 1))
    pts = np.array([x, y, [x[0] + y[0], x[1] + y[1]]])
    m = pdist.value(pts)
    assert m[2] <= 2.0 * max(m[0], m[1]) + 1e-12


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.floats(-20, 20), st.floats(-20, 20)),
       st.floats(0.01, 10.0))
def test_gauge_ball_membership_matches_halfwidths(x, r):
    pdist = cz.PseudoDistance(weights=(1, 2))
    m = float(pdist.value(np.array([x]))[0])
    assume(abs(m - r) > 1e-9 * (1.0 + r))  # stay off the float boundary
    theta = pdist.ball_halfwidths(r)
    by_box = bool(abs(x[0]) < theta[0] and abs(x[1]) < theta[1])
    assert (m < r) == by_box


def test_anisotropic_gauge_on_extension(ext7_orbit):
    twist = tw.from_orbit(ext7_orbit)
    pdist = cz.calibrate(cz.default_pseudo_distance(twist), twist,
                         sample_count=400, seed=0)
    assert sorted(pdist.weights) == [1, 1, 1, 2, 2, 2]
    assert np.isfinite(pdist.quasi_constant)
    assert pdist.doubling_constant == 2.0 ** sum(pdist.weights)


def test_calibration_divergence_detected():
    # A gauge that is not quasi-subadditive for the group law: weights force
    # m(x+y) / max(m(x), m(y)) to grow with the box radius.
    bad = cz.PseudoDistance(weights=(1, 1))
    growing = tw.TwistData(
        dim=2,
        alpha_fn=lambda X, Y: np.zeros(np.broadcast(X[..., 0], Y[..., 0]).shape),
        combine_fn=lambda X, Y: (np.asarray(X, float) + np.asarray(Y, float)) ** 3,
        abelian=False, alpha_matrix=None, weights=(1, 1))
    with pytest.raises(cz.CalibrationDiverged):
        cz.calibrate(bad, growing, sample_count=500, max_radius=16.0, seed=0)


# -- covering -------------------------------------------------------------------


def test_cover_empty_when_below_level(pd_h3, grid32):
    f = funcs.sample(grid32, funcs.smooth_bump((0.0, 0.0), 1.0, 0.5))
    covering = cz.cz_cover(f, 1.0, pd_h3)
    assert covering.balls == ()


def test_cover_single_bump(pd_h3, grid32):
    f = funcs.sample(grid32, funcs.smooth_bump((1.0, -1.0), 1.0, 4.0))
    fmax = float(np.max(np.abs(f.values)))
    covering = cz.cz_cover(f, 0.1 * fmax, pd_h3)
    assert len(covering.balls) >= 1
    # Item 1: f <= level outside the union of the balls.
    outside = np.ones(grid32.shape, dtype=bool)
    for ball in covering.balls:
        outside[cz.covering_slices(grid32, pd_h3, ball)] = False
    assert np.all(f.values.real[outside] <= 0.1 * fmax)
    # Item 2: ball averages within the measured constant.
    assert covering.mean_bound < np.inf
    # Item 3: total ball mass bound with the measured constant.
    cell = grid32.cell_volume
    total = sum(
        np.prod([s.stop - s.start for s in cz.covering_slices(grid32, pd_h3, b)])
        for b in covering.balls) * cell
    assert total * 0.1 * fmax <= covering.c_prime * float(np.sum(f.values.real) * cell) + 1e-12


def test_cover_requires_positive_level(pd_h3, grid32):
    f = funcs.sample(grid32, funcs.smooth_bump())
    with pytest.raises(cz.AlphaNonPositive):
        cz.cz_cover(f, 0.0, pd_h3)


def test_cover_rejects_signed_input(pd_h3, grid32):
    f = SampledSymbol(grid32, -np.ones(grid32.shape))
    with pytest.raises(ValueError):
        cz.cz_cover(f, 1.0, pd_h3)


# -- decomposition -----------------------------------------------------------------


def test_decompose_trivial_below_level(h3_twist, pd_h3, grid32):
    f = funcs.sample(grid32, funcs.smooth_bump((0.0, 0.0), 1.5, 1.0))
    result = cz.cz_decompose(f, 10.0, pd_h3, h3_twist)
    assert not result.bad_parts
    assert np.array_equal(result.good.values, f.values)


def test_decompose_properties(h3_twist, pd_h3, grid32):
    f = funcs.sample(grid32, funcs.smooth_bump((0.5, 0.5), 2.0, 4.0))
    fmax = float(np.max(np.abs(f.values)))
    level = 0.1 * fmax
    result = cz.cz_decompose(f, level, pd_h3, h3_twist)
    r = result.report
    assert r["n_balls"] >= 1
    # Exact on-grid reconstruction (machine precision on re-evaluation).
    recon = np.abs(f.values - (result.good.values
                               + sum(b.values for b in result.bad_parts)))
    assert np.max(recon) <= 1e-14 * (1.0 + fmax)
    # Twisted mean-zero per bad part.
    assert r["mean_zero_max_residual"] <= 1e-12 * r["f_l1"]
    # Good part bounded by the measured constant.
    assert np.max(np.abs(result.good.values)) <= r["c_doubleprime"] * level + 1e-12
    assert np.isfinite(r["c_doubleprime"]) and np.isfinite(r["c_prime"])
    # Support containment, exact index test.
    for bad, ball in zip(result.bad_parts, result.covering.balls):
        mask = np.ones(grid32.shape, dtype=bool)
        mask[cz.covering_slices(grid32, pd_h3, ball)] = False
        assert np.all(bad.values[mask] == 0)


def test_decompose_mean_zero_uses_cocycle_phase(h3_twist, pd_h3, grid32):
    # With a genuinely twisted gamma the PLAIN mean of b_i is nonzero while
    # the gamma-weighted mean vanishes; this pins the phase convention.
    f = funcs.sample(grid32, funcs.smooth_bump((2.0, 1.0), 2.5, 4.0))
    level = 0.05 * float(np.max(np.abs(f.values)))
    result = cz.cz_decompose(f, level, pd_h3, h3_twist)
    mesh = np.stack(np.meshgrid(grid32.axis, grid32.axis, indexing="ij"), axis=-1)
    cell = grid32.cell_volume
    saw_twist = False
    for bad, ball in zip(result.bad_parts, result.covering.balls):
        _, center, _ = ball
        z = np.broadcast_to(np.asarray(center), mesh.shape)
        gamma = np.exp(1j * h3_twist.alpha(z, -mesh))
        weighted = abs(np.sum(bad.values * gamma) * cell)
        plain = abs(np.sum(bad.values) * cell)
        assert weighted <= 1e-12 * result.report["f_l1"]
        if plain > 1e-6:
            saw_twist = True
    assert saw_twist


def test_decompose_detects_foreign_cover(h3_twist, pd_h3, grid32):
    # A covering built for a bump in one corner cannot serve a bump in the
    # opposite corner: the level set escapes and decompose must refuse.
    f_here = funcs.sample(grid32, funcs.smooth_bump((-4.0, -4.0), 1.5, 4.0))
    f_there = funcs.sample(grid32, funcs.smooth_bump((4.0, 4.0), 1.5, 4.0))
    level = 0.1 * float(np.max(np.abs(f_here.values)))
    foreign = cz.cz_cover(f_there, level, pd_h3)
    assert foreign.balls
    with pytest.raises(cz.CoverMissing):
        cz.cz_decompose(f_here, level, pd_h3, h3_twist, covering=foreign)


# -- kernel estimates ----------------------------------------------------------------


def test_hormander_zero_kernel(h3_twist, pd_h3):
    grid = Grid(2, 8.0, 32)
    out = cz.hormander_twist_estimate(
        lambda pts: np.zeros(np.asarray(pts).shape[:-1], dtype=complex),
        pd_h3, h3_twist, 4.0 * pd_h3.quasi_constant, grid)
    assert out["estimate"] == 0.0


def test_hormander_rejects_small_c2(h3_twist, pd_h3):
    with pytest.raises(cz.C2TooSmall):
        cz.hormander_twist_estimate(funcs.truncated_power(), pd_h3, h3_twist,
                                    1.0, Grid(2, 8.0, 32))


def test_hormander_constant_annulus_untwisted(pd_h3):
    # Kernel supported away from the origin and constant on its annulus,
    # untwisted phase: where both k(z-u) and k(z) sit in the constancy region
    # the integrand cancels, so only boundary slivers of width |u| contribute
    # and the estimate stays far below the raw mass of the kernel.
    untwisted = tw.zero_twist(2)
    grid = Grid(2, 8.0, 64)
    k = funcs.indicator_sup_annulus(1.0, 4.0, 1.0)
    out = cz.hormander_twist_estimate(k, pd_h3, untwisted,
                                      4.0 * pd_h3.quasi_constant, grid,
                                      u_grid=Grid(2, 8.0, 32))
    mass = 60.0  # integral of the kernel: 8^2 - 2^2
    assert 0.0 < out["estimate"] < 0.25 * mass


def test_hormander_refinement_stability(h3_twist, pd_h3):
    k = funcs.truncated_power(3.0, 1.0, 5.0)
    u_grid = Grid(2, 8.0, 16)
    c2 = 4.0 * pd_h3.quasi_constant
    coarse = cz.hormander_twist_estimate(k, pd_h3, h3_twist, c2,
                                         Grid(2, 8.0, 32), u_grid=u_grid)
    fine = cz.hormander_twist_estimate(k, pd_h3, h3_twist, c2,
                                       Grid(2, 8.0, 64), u_grid=u_grid)
    assert abs(fine["estimate"] - coarse["estimate"]) <= 0.15 * fine["estimate"]


# -- weak (1,1) -------------------------------------------------------------------


def test_weak11_zero_input(h3_twist, grid32):
    k = funcs.sample(grid32, funcs.smooth_bump((0.0, 0.0), 1.0, 1.0))
    f = SampledSymbol(grid32, np.zeros(grid32.shape))
    out = cz.weak11_empirical(h3_twist, k, f, [0.1, 1.0])
    assert all(v == 0.0 for v in out["ratios"].values())


def test_weak11_homogeneity(h3_twist, grid32):
    k = funcs.sample(grid32, funcs.smooth_bump((0.5, 0.0), 1.2, 2.0))
    f = funcs.sample(grid32, funcs.smooth_bump((-1.0, 1.0), 1.5, 3.0))
    probe = cz.weak11_empirical(h3_twist, k, f, [1.0])["kf_sup"]
    levels = [probe / 2, probe / 4, probe / 8]
    base = cz.weak11_empirical(h3_twist, k, f, levels)
    scaled = cz.weak11_empirical(h3_twist, k,
                                 SampledSymbol(grid32, 2.0 * f.values),
                                 [2 * lv for lv in levels])
    for a, b in zip(base["ratios"].values(), scaled["ratios"].values()):
        assert a == b


def test_weak11_stability(h3_twist):
    grid = Grid(2, 8.0, 64)
    k = funcs.sample(grid, funcs.smooth_bump((0.5, 0.0), 1.2, 2.0))
    f = funcs.sample(grid, funcs.smooth_bump((-1.0, 1.0), 1.5, 3.0))
    probe = cz.weak11_empirical(h3_twist, k, f, [1.0])["kf_sup"]
    levels = [probe / 2 ** j for j in range(1, 5)]
    out = cz.weak11_empirical(h3_twist, k, f, levels)
    assert out["stability_factor"] <= 4.0
