"""Numerical twisted convolution on a flat-orbit predual.

The convolution of two symbols is

    (b1 * b2)(x) = density * integral  exp(-i a(x, -y)) b1(x . (-y)) b2(y) dy

by trapezoid quadrature on the grid, where a is the exact additive cocycle
and x . y the reduced group product, both compiled from their rational
polynomial closed forms.  For abelian preduals (step <= 2 algebras) the
cocycle is a skew bilinear form and the product is addition, which factors
the kernel into per-axis modulations; the convolution then reduces to a batch
of 1-d FFT correlations instead of an O(G^2) double sum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import orbits as ob
from .grids import Grid, GridMismatch, SampledSymbol, evaluate_symbol
from .polymap import Poly


class NotFlat(Exception):
    pass


@dataclass(frozen=True)
class TwistData:
    """Float-level twist structure: cocycle, reduced product, and coordinate weights."""

    dim: int
    alpha_fn: object          # (X (...,d), Y (...,d)) -> (...)
    combine_fn: object        # (X (...,d), Y (...,d)) -> (...,d)
    abelian: bool
    alpha_matrix: np.ndarray | None  # set when the cocycle is purely bilinear
    weights: tuple[int, ...]

    def alpha(self, X, Y) -> np.ndarray:
        return self.alpha_fn(np.asarray(X, float), np.asarray(Y, float))

    def combine(self, X, Y) -> np.ndarray:
        return self.combine_fn(np.asarray(X, float), np.asarray(Y, float))


def _compiled_pair(alpha_poly: Poly, product_polys: list[Poly], d: int):
    alpha_eval = alpha_poly.compile()
    product_evals = [p.compile() for p in product_polys]

    def split_vars(X, Y):
        return [X[..., a] for a in range(d)] + [Y[..., a] for a in range(d)]

    def alpha_fn(X, Y):
        return alpha_eval(split_vars(X, Y))

    def combine_fn(X, Y):
        varlist = split_vars(X, Y)
        comps = [ev(varlist) for ev in product_evals]
        return np.stack(np.broadcast_arrays(*comps), axis=-1)

    return alpha_fn, combine_fn


def from_orbit(orbit: ob.OrbitData) -> TwistData:
    """Compile the exact cocycle and product polynomials of a flat orbit."""
    if not orbit.flat:
        raise NotFlat("twist data requires a flat orbit")
    d = orbit.d
    product_polys, alpha_poly = ob._bch_polynomial_split(orbit)
    nv = 2 * d
    additive = all(
        p.terms == (Poly.variable(nv, a) + Poly.variable(nv, d + a)).terms
        for a, p in enumerate(product_polys)
    )
    alpha_fn, combine_fn = _compiled_pair(alpha_poly, product_polys, d)
    if additive:
        combine_fn = lambda X, Y: np.asarray(X, float) + np.asarray(Y, float)
    return TwistData(
        dim=d,
        alpha_fn=alpha_fn,
        combine_fn=combine_fn,
        abelian=additive,
        alpha_matrix=alpha_poly.bilinear_matrix(d),
        weights=ob.predual_weights(orbit),
    )


def zero_twist(d: int) -> TwistData:
    """Untwisted structure: zero cocycle over an abelian predual."""
    return TwistData(
        dim=d,
        alpha_fn=lambda X, Y: np.zeros(np.broadcast(X[..., 0], Y[..., 0]).shape),
        combine_fn=lambda X, Y: np.asarray(X, float) + np.asarray(Y, float),
        abelian=True,
        alpha_matrix=np.zeros((d, d)),
        weights=(1,) * d,
    )


def _check_grids(b1: SampledSymbol, b2: SampledSymbol, d: int):
    if b1.grid.dim != d or b2.grid.dim != d:
        raise GridMismatch("symbol grid dimension does not match the twist")
    if not b1.grid.same_box(b2.grid):
        raise GridMismatch("symbols must share one grid")


def twisted_convolve(twist: TwistData, b1: SampledSymbol, b2: SampledSymbol,
                     density: float = 1.0, force_direct: bool = False) -> SampledSymbol:
    """Trapezoid-rule twisted convolution on the common grid of b1, b2."""
    _check_grids(b1, b2, twist.dim)
    grid = b1.grid
    use_fast = (
        not force_direct
        and twist.dim == 2
        and twist.abelian
        and twist.alpha_matrix is not None
        and twist.alpha_matrix[0, 0] == 0.0
        and twist.alpha_matrix[1, 1] == 0.0
    )
    if use_fast:
        values = _convolve_fft_2d(twist, b1, b2, density)
    else:
        values = _convolve_direct(twist, b1, b2, density)
    return SampledSymbol(grid=grid, values=values)


def _convolve_direct(twist: TwistData, b1: SampledSymbol, b2: SampledSymbol,
                     density: float) -> np.ndarray:
    grid = b1.grid
    nodes = grid.nodes()                      # (G, d)
    total = nodes.shape[0]
    vals2 = b2.values.reshape(-1)             # (G,)
    cell = density * grid.cell_volume
    out = np.empty(total, dtype=complex)
    chunk = max(1, (1 << 22) // total)
    for start in range(0, total, chunk):
        X = nodes[start:start + chunk][:, None, :]   # (c, 1, d)
        Y = nodes[None, :, :]                        # (1, G, d)
        shifted = twist.combine(X, -Y)               # (c, G, d)
        phase = np.exp(-1j * twist.alpha(X, -Y))     # (c, G)
        f1 = evaluate_symbol(b1, shifted)            # (c, G)
        out[start:start + chunk] = cell * np.sum(phase * f1 * vals2, axis=1)
    return out.reshape(grid.shape)


def _convolve_fft_2d(twist: TwistData, b1: SampledSymbol, b2: SampledSymbol,
                     density: float) -> np.ndarray:
    """Abelian d=2 path: for a skew bilinear cocycle the kernel factors as
    exp(i a(x, y)) = exp(i c1 x_0 y_1) exp(i c2 x_1 y_0), giving a 1-d FFT
    correlation along axis 0 for every (x_1, y_1) pair."""
    grid = b1.grid
    n = grid.points
    ax = grid.axis
    c1 = float(twist.alpha_matrix[0, 1])
    c2 = float(twist.alpha_matrix[1, 0])
    cell = density * grid.cell_volume

    # b1 at all lattice differences: offset m in [-(n-1), n-1] per axis.
    offs = np.arange(-(n - 1), n)
    if b1.evaluator is not None:
        coords = offs * grid.h
        pts = np.stack(np.meshgrid(coords, coords, indexing="ij"), axis=-1)
        d1 = np.asarray(b1.evaluator(pts), dtype=complex)
    else:
        half = n // 2
        src = offs + half
        valid = (src >= 0) & (src < n)
        d1 = np.zeros((2 * n - 1, 2 * n - 1), dtype=complex)
        take = np.clip(src, 0, n - 1)
        d1[np.ix_(valid, valid)] = b1.values[np.ix_(take[valid], take[valid])]

    m_fft = 4 * n
    fd1 = np.fft.fft(d1, n=m_fft, axis=0)              # (m_fft, 2n-1)
    e1 = np.exp(1j * c1 * np.outer(ax, ax))            # [x0 index, y1 index]
    out = np.empty((n, n), dtype=complex)
    col_gather = np.empty((n, n), dtype=np.int64)
    for ixp in range(n):
        col_gather[ixp] = (ixp - np.arange(n)) + (n - 1)
    for ixp in range(n):
        g = b2.values * np.exp(1j * c2 * ax[ixp] * ax)[:, None]   # (y0, y1)
        fg = np.fft.fft(g, n=m_fft, axis=0)
        prod = fd1[:, col_gather[ixp]] * fg
        conv = np.fft.ifft(prod, axis=0)[n - 1:2 * n - 1, :]      # (x0, y1)
        out[:, ixp] = cell * np.sum(conv * e1, axis=1)
    return out


def delta_action(twist: TwistData, phi: SampledSymbol, v, grid: Grid | None = None) -> SampledSymbol:
    """Right action of the point mass at v:
    (phi * delta_v)(x) = exp(-i a(x, -v)) phi(x . (-v)), evaluated pointwise."""
    grid = grid or phi.grid
    if grid.dim != twist.dim:
        raise GridMismatch("grid dimension does not match the twist")
    v = np.asarray(v, dtype=float)
    nodes = grid.nodes()
    V = np.broadcast_to(v, nodes.shape)
    shifted = twist.combine(nodes, -V)
    phase = np.exp(-1j * twist.alpha(nodes, -V))
    if phi.evaluator is not None:
        f = evaluate_symbol(phi, shifted)
    elif twist.abelian and _lattice_aligned(grid, v) and phi.grid.same_box(grid):
        f = _shift_by_lattice(grid, phi.values, v)
    else:
        raise ValueError("delta action needs an analytic evaluator "
                         "(or an abelian twist with a lattice-aligned shift "
                         "on the symbol's own grid)")
    values = (phase * f).reshape(grid.shape)
    return SampledSymbol(grid=grid, values=values)


def _lattice_aligned(grid: Grid, v: np.ndarray, tol: float = 1e-12) -> bool:
    steps = v / grid.h
    return bool(np.all(np.abs(steps - np.round(steps)) <= tol))


def _shift_by_lattice(grid: Grid, values: np.ndarray, v: np.ndarray) -> np.ndarray:
    """values evaluated at (node - v) via exact index displacement, zero fill."""
    steps = np.round(v / grid.h).astype(int)
    out = values
    for axis, s in enumerate(steps):
        shifted = np.zeros_like(out)
        n = grid.points
        if s >= 0:
            src = slice(0, n - s) if s else slice(None)
            dst = slice(s, n) if s else slice(None)
        else:
            src = slice(-s, n)
            dst = slice(0, n + s)
        sel_src = [slice(None)] * out.ndim
        sel_dst = [slice(None)] * out.ndim
        sel_src[axis] = src
        sel_dst[axis] = dst
        shifted[tuple(sel_dst)] = out[tuple(sel_src)]
        out = shifted
    return out.reshape(-1)
