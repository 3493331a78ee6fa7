"""Orbit data, jump indices, the additive cocycle and its exact identities."""

from fractions import Fraction

import pytest

from nilharm import catalog as cat, exactlinalg as ela, lie_core as lc
from nilharm import orbits as ob, seeds
from nilharm.rationals import vec_scale

F = Fraction


def dual_functional(n, i=0):
    return ob.Functional.dual_basis_vector(n, i)


# -- isotropy ------------------------------------------------------------------


def test_h3_isotropy_is_center(h3):
    iso = ob.isotropy_algebra(h3, dual_functional(3))
    assert iso == [(F(1), F(0), F(0))]


def test_abelian_isotropy_is_everything():
    L = cat.abelian(3)
    assert len(ob.isotropy_algebra(L, dual_functional(3))) == 3


def test_extension_isotropy_is_center():
    L = cat.extended_g0st(1, 1)
    iso = ob.isotropy_algebra(L, dual_functional(7))
    assert ela.subspace_equal(iso, lc.center(L))


# -- jump indices ----------------------------------------------------------------


def test_h3_jump_data(h3_orbit):
    assert h3_orbit.jump_set == (2, 3)
    assert h3_orbit.d == 2
    assert h3_orbit.flat


def test_abelian_jump_data_empty_not_flat():
    L = cat.abelian(4)
    orbit = ob.jump_indices(L, lc.jordan_holder_flag(L), dual_functional(4))
    assert orbit.jump_set == ()
    assert not orbit.flat


def test_extension_jump_data(ext7_orbit):
    assert ext7_orbit.jump_set == (2, 3, 4, 5, 6, 7)
    assert ext7_orbit.flat


def test_pairing_not_one_rejected(h3):
    flag = lc.jordan_holder_flag(h3)
    bad = ob.Functional((F(2), F(0), F(0)))
    with pytest.raises(ob.PairingNotOne):
        ob.jump_indices(h3, flag, bad)


def test_direct_sum_determinant(h3_orbit, ext7_orbit):
    for orbit in (h3_orbit, ext7_orbit):
        full = [list(v) for v in
                list(orbit.isotropy_basis) + list(orbit.predual_basis)]
        assert ela.det(full) != 0


# -- reduced product and the cocycle ------------------------------------------------


def test_h3_alpha_value(h3_orbit):
    # Dynkin degree-2 gives alpha = (x3 y2 - x2 y3)/2 in (x2, x3) coordinates.
    assert ob.alpha(h3_orbit, (F(1), F(0)), (F(0), F(1))) == F(-1, 2)


def test_h3_product_is_addition(h3_orbit):
    rnd = seeds.stream("orb.h3add", 0)
    x = seeds.random_fraction_vector(rnd, 2)
    y = seeds.random_fraction_vector(rnd, 2)
    assert ob.product_e(h3_orbit, x, y) == tuple(a + b for a, b in zip(x, y))


def test_alpha_vanishes_on_rays(h3_orbit, ext7_orbit):
    rnd = seeds.stream("orb.rays", 0)
    for orbit in (h3_orbit, ext7_orbit):
        for _ in range(20):
            x = seeds.random_fraction_vector(rnd, orbit.d)
            lam = seeds.random_fraction(rnd)
            mu = seeds.random_fraction(rnd)
            assert ob.alpha(orbit, vec_scale(lam, x), vec_scale(mu, x)) == 0


def test_alpha_zero_arguments(h3_orbit):
    zero = (F(0), F(0))
    rnd = seeds.stream("orb.zero", 0)
    y = seeds.random_fraction_vector(rnd, 2)
    assert ob.alpha(h3_orbit, zero, y) == 0
    assert ob.alpha(h3_orbit, y, tuple(-a for a in y)) == 0


def test_non_flat_orbit_refuses_product():
    L = cat.abelian(4)
    orbit = ob.jump_indices(L, lc.jordan_holder_flag(L), dual_functional(4))
    with pytest.raises(ob.NotFlat):
        ob.product_e(orbit, (), ())
    with pytest.raises(ob.NotFlat):
        ob.alpha(orbit, (), ())


def test_cocycle_identity_h3(h3_orbit):
    rnd = seeds.stream("orb.cocycle.h3", 0)
    for _ in range(50):
        x = seeds.random_fraction_vector(rnd, 2)
        y = seeds.random_fraction_vector(rnd, 2)
        z = seeds.random_fraction_vector(rnd, 2)
        assert ob.verify_cocycle_identity(h3_orbit, x, y, z)


def test_cocycle_identity_with_zero_argument(h3_orbit):
    rnd = seeds.stream("orb.cocycle.zero", 0)
    x = seeds.random_fraction_vector(rnd, 2)
    y = seeds.random_fraction_vector(rnd, 2)
    assert ob.verify_cocycle_identity(h3_orbit, x, y, (F(0), F(0)))


def test_cocycle_identity_extension(ext7_orbit):
    rnd = seeds.stream("orb.cocycle.ext", 0)
    for _ in range(50):
        x = seeds.random_fraction_vector(rnd, 6, max_num=3, max_den=3)
        y = seeds.random_fraction_vector(rnd, 6, max_num=3, max_den=3)
        z = seeds.random_fraction_vector(rnd, 6, max_num=3, max_den=3)
        assert ob.verify_cocycle_identity(ext7_orbit, x, y, z)


def test_alpha_symmetrization_consistency(h3_orbit, ext7_orbit):
    # alpha(x,y) + alpha(y,x) equals the central part of x*y + y*x, computed
    # through an independent path (two full splits, no cocycle shortcut).
    rnd = seeds.stream("orb.sym", 0)
    for orbit in (h3_orbit, ext7_orbit):
        L = orbit.algebra
        for _ in range(10):
            x = seeds.random_fraction_vector(rnd, orbit.d, max_num=3, max_den=3)
            y = seeds.random_fraction_vector(rnd, orbit.d, max_num=3, max_den=3)
            lhs = ob.alpha(orbit, x, y) + ob.alpha(orbit, y, x)
            w1 = lc.bch_product(L, orbit.embed(x), orbit.embed(y))
            w2 = lc.bch_product(L, orbit.embed(y), orbit.embed(x))
            total = tuple(a + b for a, b in zip(w1, w2))
            rhs = orbit.split(total)[1] * orbit.xi0.pair(orbit.flag.vectors[0])
            assert lhs == rhs


# -- gamma identities ----------------------------------------------------------------


def test_gamma_identities_h3(h3_orbit):
    rnd = seeds.stream("orb.gamma.h3", 0)
    x = seeds.random_fraction_vector(rnd, 2)
    y = seeds.random_fraction_vector(rnd, 2)
    z = seeds.random_fraction_vector(rnd, 2)
    out = ob.gamma_identities(h3_orbit, x, y, z)
    assert all(out["additive_exact"].values())
    assert all(v < 1e-12 for v in out["multiplicative_residual"].values())


def test_gamma_identity_inverse_reversal_at_zero(h3_orbit):
    zero = (F(0), F(0))
    out = ob.gamma_identities(h3_orbit, zero, zero, zero)
    assert out["multiplicative_residual"]["inverse_reversal"] == 0.0


def test_gamma_identities_extension(ext7_orbit):
    rnd = seeds.stream("orb.gamma.ext", 0)
    for _ in range(5):
        x = seeds.random_fraction_vector(rnd, 6, max_num=3, max_den=3)
        y = seeds.random_fraction_vector(rnd, 6, max_num=3, max_den=3)
        z = seeds.random_fraction_vector(rnd, 6, max_num=3, max_den=3)
        out = ob.gamma_identities(ext7_orbit, x, y, z)
        assert all(out["additive_exact"].values())
        assert all(v < 1e-12 for v in out["multiplicative_residual"].values())


# -- polynomial closed forms -----------------------------------------------------------


def test_h3_alpha_polynomial(h3_orbit):
    poly = ob.alpha_polynomial(h3_orbit)
    # alpha = (x2 y1 - x1 y2)/2 with predual variables (x1, x2, y1, y2).
    assert dict(poly.terms) == {(0, 1, 1, 0): F(1, 2), (1, 0, 0, 1): F(-1, 2)}


def test_polynomials_match_pointwise_alpha(ext7_orbit):
    apoly = ob.alpha_polynomial(ext7_orbit)
    ppolys = ob.product_polynomials(ext7_orbit)
    rnd = seeds.stream("orb.polycheck", 0)
    for _ in range(10):
        x = seeds.random_fraction_vector(rnd, 6)
        y = seeds.random_fraction_vector(rnd, 6)
        point = x + y
        prod, a = ob.product_and_alpha(ext7_orbit, x, y)
        assert apoly.evaluate_exact(point) == a
        assert tuple(p.evaluate_exact(point) for p in ppolys) == prod


def test_predual_weights(h3_orbit, ext7_orbit):
    assert ob.predual_weights(h3_orbit) == (1, 1)
    weights = ob.predual_weights(ext7_orbit)
    assert sorted(weights) == [1, 1, 1, 2, 2, 2]
