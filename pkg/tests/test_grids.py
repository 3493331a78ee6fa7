"""Grid geometry, sampled symbols, interpolation, and file round trips."""

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nilharm import fileio, funcs
from nilharm.grids import (Grid, SampledSymbol, TorusGridFunction, lp_norm,
                           multilinear, symbol_check_involution, torus_lp_norm)


def test_grid_validation():
    with pytest.raises(ValueError):
        Grid(2, 8.0, 7)
    with pytest.raises(ValueError):
        Grid(2, 8.0, 48)   # not a power of two
    with pytest.raises(ValueError):
        Grid(0, 8.0, 16)
    with pytest.raises(ValueError):
        Grid(2, -1.0, 16)


def test_grid_geometry():
    g = Grid(2, 8.0, 16)
    assert g.h == 1.0
    assert g.axis[0] == -8.0 and g.axis[-1] == 7.0
    assert g.axis[g.points // 2] == 0.0
    assert g.nodes().shape == (256, 2)


def test_node_set_symmetric_up_to_boundary():
    g = Grid(1, 4.0, 8)
    interior = g.axis[1:]
    assert np.allclose(sorted(-interior), sorted(interior))


def test_symbol_shape_and_finiteness(grid32):
    with pytest.raises(ValueError):
        SampledSymbol(grid32, np.zeros((3, 3)))
    bad = np.zeros(grid32.shape)
    bad[0, 0] = np.inf
    with pytest.raises(ValueError):
        SampledSymbol(grid32, bad)


def test_from_evaluator_agrees_on_nodes(grid32):
    sym = SampledSymbol.from_evaluator(grid32, funcs.gaussian((0.3, -0.7)))
    assert sym.node_agreement() <= 1e-12


def test_multilinear_reproduces_node_values(grid32):
    sym = funcs.sample(grid32, funcs.gaussian((0.5, 0.1)))
    pts = grid32.nodes()[7:2000:13]
    direct = funcs.gaussian((0.5, 0.1))(pts)
    assert np.max(np.abs(multilinear(grid32, sym.values, pts) - direct)) <= 1e-12


def test_multilinear_zero_extension(grid32):
    sym = funcs.sample(grid32, funcs.gaussian())
    outside = np.array([[9.0, 0.0], [0.0, -9.5], [20.0, 20.0]])
    assert np.all(multilinear(grid32, sym.values, outside) == 0)


def test_multilinear_interpolates_linear_function():
    g = Grid(2, 8.0, 16)
    def lin(pts):
        pts = np.asarray(pts, float)
        return (2.0 * pts[..., 0] - 0.5 * pts[..., 1]).astype(complex)
    sym = funcs.sample(g, lin)
    gen = np.random.default_rng(3)
    pts = gen.uniform(-6, 6, size=(50, 2))
    assert np.max(np.abs(multilinear(g, sym.values, pts) - lin(pts))) <= 1e-12


def test_lp_norm_scaling(grid32):
    sym = funcs.sample(grid32, funcs.gaussian())
    doubled = SampledSymbol(grid32, 2.0 * sym.values)
    for p in (1.0, 2.0, 4.0):
        assert np.isclose(lp_norm(doubled, p), 2.0 * lp_norm(sym, p))
    assert np.isclose(lp_norm(sym, 2, density=0.25), 0.5 * lp_norm(sym, 2))


def test_check_involution_is_involutive(grid32):
    sym = funcs.sample(grid32, funcs.gaussian((0.4, -0.2), 0.8, (0.3, 0.7)))
    twice = symbol_check_involution(symbol_check_involution(sym))
    assert np.max(np.abs(twice.values - sym.values)) <= 1e-12


def test_torus_function_shape(grid32):
    with pytest.raises(ValueError):
        TorusGridFunction(grid=grid32, angles=4,
                          values=np.zeros((4,) + grid32.shape))
    fun = TorusGridFunction(grid=grid32, angles=8,
                            values=np.ones((8,) + grid32.shape))
    assert np.isclose(torus_lp_norm(fun, 2),
                      np.sqrt(grid32.cell_volume * 32 * 32))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 6), st.integers(1, 4))
def test_symbol_file_round_trip(log2n, scale):
    g = Grid(1, float(scale), 2 ** max(log2n, 3))
    gen = np.random.default_rng(log2n)
    vals = gen.standard_normal(g.shape) + 1j * gen.standard_normal(g.shape)
    sym = SampledSymbol(g, vals)
    doc = fileio.symbol_to_dict(sym)
    back = fileio.symbol_from_dict(json.loads(json.dumps(doc)))
    assert back.grid.same_box(g)
    assert np.array_equal(back.values, sym.values)
