"""Discretized operator calculus for the 2-dimensional flat predual.

The Schrodinger-type convention is fixed once:

    (rep(q, p) f)(x) = exp(i (q x + q p / 2)) f(x + p),

acting on a 1-d grid sharing the axis of the 2-d symbol grid; lattice-aligned
p-shifts are exact index displacements.  The symbol-to-operator transform is

    transform(b) = density * integral b(q, p) rep(q, p) dq dp

assembled as an integral-kernel matrix; the p-integration collapses onto the
matrix diagonals, the q-integration is a trapezoid sum.  ``density`` is the
measure normalization on the predual: calibrating it so that the operator
trace of one Gaussian symbol reproduces the symbol value at 0 makes the
transform simultaneously trace-correct, a *-homomorphism for the twisted
convolution, and unitary from L^2(density * dx) onto Hilbert-Schmidt
operators.  The expected calibrated value is (2 pi)^(-d/2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import Grid, GridMismatch, SampledSymbol, lp_norm, symbol_check_involution
from .twist import TwistData, twisted_convolve


class DimensionNot2(Exception):
    pass


@dataclass(frozen=True)
class DiscretizedOperator:
    """Integral-kernel matrix on the 1-d grid; quadrature weight = spacing."""

    grid: Grid
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.ascontiguousarray(self.matrix, dtype=complex)
        m = self.grid.points
        if mat.shape != (m, m):
            raise ValueError("operator matrix shape mismatch")
        if not np.all(np.isfinite(mat.view(float))):
            raise ValueError("operator entries must be finite")
        object.__setattr__(self, "matrix", mat)

    @property
    def weight(self) -> float:
        return self.grid.h

    def apply(self, f: np.ndarray) -> np.ndarray:
        return self.weight * (self.matrix @ f)

    def compose(self, other: "DiscretizedOperator") -> "DiscretizedOperator":
        if not self.grid.same_box(other.grid):
            raise GridMismatch("operator grids differ")
        return DiscretizedOperator(self.grid, self.weight * (self.matrix @ other.matrix))

    def adjoint(self) -> "DiscretizedOperator":
        return DiscretizedOperator(self.grid, self.matrix.conj().T)

    def hs_norm(self) -> float:
        return float(self.weight * np.linalg.norm(self.matrix))

    def trace(self) -> complex:
        return complex(self.weight * np.trace(self.matrix))

    def hs_inner(self, other: "DiscretizedOperator") -> complex:
        """Trace of self . other^*, the Hilbert-Schmidt pairing."""
        return complex(self.weight ** 2 * np.sum(self.matrix * other.matrix.conj()))

    def __sub__(self, other: "DiscretizedOperator") -> "DiscretizedOperator":
        return DiscretizedOperator(self.grid, self.matrix - other.matrix)

    def __add__(self, other: "DiscretizedOperator") -> "DiscretizedOperator":
        return DiscretizedOperator(self.grid, self.matrix + other.matrix)


def standard_gaussian(grid: Grid) -> SampledSymbol:
    def ev(pts):
        pts = np.asarray(pts, float)
        return np.exp(-0.5 * np.sum(pts ** 2, axis=-1)) + 0j
    return SampledSymbol.from_evaluator(grid, ev)


class HeisenbergRealization:
    """Operator calculus bound to one twist structure and one grid pair."""

    def __init__(self, twist: TwistData, symbol_grid: Grid,
                 state_grid: Grid | None = None, density: float | None = None):
        if twist.dim != 2 or symbol_grid.dim != 2:
            raise DimensionNot2("this realization needs a 2-dimensional predual")
        self.twist = twist
        self.symbol_grid = symbol_grid
        self.state_grid = state_grid or symbol_grid.axis_grid()
        if self.state_grid.dim != 1 or not self.state_grid.same_box(symbol_grid):
            raise GridMismatch("state grid must be the axis of the symbol grid")
        if density is None:
            density = self._calibrate()
        self.density = float(density)

    def _calibrate(self) -> float:
        """density such that trace(transform(b)) = b(0) for a standard Gaussian."""
        probe = standard_gaussian(self.symbol_grid)
        raw = self._assemble(probe, density=1.0)
        tr = raw.trace()
        b0 = probe.at_origin()
        if abs(tr) == 0.0:
            raise ZeroDivisionError("calibration probe has zero raw trace")
        rho = (b0 / tr).real
        return float(rho)

    # -- representation ---------------------------------------------------

    def rep_apply(self, q: float, p: float, f: np.ndarray) -> np.ndarray:
        """(rep(q,p) f)(x) = exp(i(qx + qp/2)) f(x+p); p must be lattice-aligned."""
        h = self.state_grid.h
        steps = p / h
        s = int(round(steps))
        if abs(steps - s) > 1e-9:
            raise ValueError("representation shifts must be lattice-aligned")
        x = self.state_grid.axis
        shifted = np.zeros_like(np.asarray(f, dtype=complex))
        n = self.state_grid.points
        if s >= 0:
            shifted[:n - s or None] = f[s:]
        else:
            shifted[-s:] = f[:n + s]
        return np.exp(1j * (q * x + q * p / 2.0)) * shifted

    def ccr_phase_residual(self, u, v, test_vectors) -> float:
        """Max relative discrepancy of rep(u) rep(v) = exp(i a(u,v)) rep(u . v)."""
        u = np.asarray(u, float)
        v = np.asarray(v, float)
        uv = self.twist.combine(u[None, :], v[None, :])[0]
        phase = np.exp(1j * float(self.twist.alpha(u[None, :], v[None, :])[0]))
        worst = 0.0
        for f in test_vectors:
            lhs = self.rep_apply(u[0], u[1], self.rep_apply(v[0], v[1], f))
            rhs = phase * self.rep_apply(uv[0], uv[1], f)
            scale = np.linalg.norm(rhs)
            if scale == 0.0:
                continue
            worst = max(worst, float(np.linalg.norm(lhs - rhs) / scale))
        return worst

    # -- transform and inverse --------------------------------------------

    def _assemble(self, b: SampledSymbol, density: float) -> DiscretizedOperator:
        if not b.grid.same_box(self.symbol_grid) or b.grid.dim != 2:
            raise GridMismatch("symbol grid does not match the realization")
        n = self.symbol_grid.points
        h = self.symbol_grid.h
        ax = self.symbol_grid.axis
        half = n // 2
        # Symbol values at all lattice p-offsets m = k - j (zero outside the box).
        offs = np.arange(-(n - 1), n)
        src = offs + half
        valid = (src >= 0) & (src < n)
        b_offs = np.zeros((n, 2 * n - 1), dtype=complex)
        b_offs[:, valid] = b.values[:, src[valid]]
        # Kernel K(x_j, x_k) = density * h * sum_q b(q, (k-j) h) exp(i q (x_j+x_k)/2).
        mids = (-self.symbol_grid.half_width
                + 0.5 * h * np.arange(2 * n - 1))
        phases = np.exp(1j * np.outer(ax, mids))          # (q, mid)
        f_table = b_offs.T @ phases                       # (offset, mid)
        j_idx = np.arange(n)[:, None]
        k_idx = np.arange(n)[None, :]
        kernel = density * h * f_table[k_idx - j_idx + (n - 1), j_idx + k_idx]
        return DiscretizedOperator(self.state_grid, kernel)

    def transform(self, b: SampledSymbol) -> DiscretizedOperator:
        return self._assemble(b, density=self.density)

    def inverse(self, B: DiscretizedOperator) -> SampledSymbol:
        """Symbol recovery b(q,p) = trace(rep(q,p)^{-1} B); no density factor."""
        if not B.grid.same_box(self.state_grid):
            raise GridMismatch("operator grid does not match the realization")
        n = self.symbol_grid.points
        h = self.symbol_grid.h
        ax = self.symbol_grid.axis
        half = n // 2
        diags = np.zeros((n, n), dtype=complex)           # (state index j, p index)
        for mi in range(n):
            s = mi - half
            if s >= 0:
                j = np.arange(s, n)
            else:
                j = np.arange(0, n + s)
            diags[j, mi] = B.matrix[j - s, j]
        e2 = np.exp(-1j * np.outer(ax, ax))               # (q, j)
        summed = e2 @ diags                               # (q, p)
        values = h * np.exp(0.5j * np.outer(ax, ax)) * summed
        return SampledSymbol(grid=self.symbol_grid, values=values)

    # -- convolution and norms ---------------------------------------------

    def convolve(self, a: SampledSymbol, b: SampledSymbol, **kw) -> SampledSymbol:
        return twisted_convolve(self.twist, a, b, density=self.density, **kw)

    def symbol_norm(self, b: SampledSymbol, p: float = 2.0) -> float:
        """L^p norm in the calibrated measure (density * Lebesgue)."""
        return lp_norm(b, p, density=self.density)

    # -- identity reports ----------------------------------------------------

    def identity_report(self, symbols: list[SampledSymbol],
                        pairs: list[tuple[SampledSymbol, SampledSymbol]]) -> dict:
        """Residuals of the trace, adjoint, isometry, pairing, inversion and
        homomorphism identities on the given test family."""
        report: dict = {"density": self.density, "trace": [], "adjoint": [],
                        "hs_isometry": [], "pairing": [], "inversion": [],
                        "homomorphism": []}
        for b in symbols:
            T = self.transform(b)
            b0 = b.at_origin()
            report["trace"].append(abs(T.trace() - b0) / (1.0 + abs(b0)))
            report["adjoint"].append(
                (self.transform(symbol_check_involution(b)) - T.adjoint()).hs_norm())
            nb = self.symbol_norm(b)
            scale = nb if nb > 0 else 1.0
            report["hs_isometry"].append(abs(T.hs_norm() - nb) / scale)
            back = self.inverse(T)
            diff = SampledSymbol(b.grid, back.values - b.values)
            report["inversion"].append(self.symbol_norm(diff) / scale)
        for a, b in pairs:
            Ta, Tb = self.transform(a), self.transform(b)
            conv = self.convolve(a, b)
            resid = (self.transform(conv) - Ta.compose(Tb)).hs_norm()
            scale = self.symbol_norm(a) * self.symbol_norm(b)
            if scale == 0.0:
                scale = 1.0
            report["homomorphism"].append(resid / scale)
            lhs = Ta.hs_inner(Tb)
            rhs = self.density * a.grid.cell_volume * np.sum(a.values * b.values.conj())
            report["pairing"].append(abs(lhs - rhs) / scale)
        return report
