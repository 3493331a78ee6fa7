"""Uniform box grids, sampled complex symbols, and circle-extended grid functions.

Nodes along each axis are -L + h*k, k = 0..N-1 with h = 2L/N, so coordinate
differences of nodes land back on the node lattice and the node set is
symmetric under negation except for the single -L boundary layer.  Values are
stored C-contiguous with the last axis varying fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


class GridMismatch(Exception):
    pass


@dataclass(frozen=True)
class Grid:
    dim: int
    half_width: float
    points: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("grid dimension must be positive")
        if self.points < 8 or (self.points & (self.points - 1)) != 0:
            raise ValueError("points per axis must be a power of two, at least 8")
        if not self.half_width > 0:
            raise ValueError("half width must be positive")

    @property
    def h(self) -> float:
        return 2.0 * self.half_width / self.points

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.points,) * self.dim

    @property
    def cell_volume(self) -> float:
        return self.h ** self.dim

    @property
    def origin_index(self) -> tuple[int, ...]:
        return (self.points // 2,) * self.dim

    @cached_property
    def axis(self) -> np.ndarray:
        return -self.half_width + self.h * np.arange(self.points)

    def nodes(self) -> np.ndarray:
        """All nodes, shape (points**dim, dim), row-major order."""
        mesh = np.meshgrid(*([self.axis] * self.dim), indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def axis_grid(self) -> "Grid":
        return Grid(dim=1, half_width=self.half_width, points=self.points)

    def same_box(self, other: "Grid") -> bool:
        return (self.half_width == other.half_width
                and self.points == other.points)


@dataclass(frozen=True)
class SampledSymbol:
    """Complex grid function with an optional analytic off-node evaluator."""

    grid: Grid
    values: np.ndarray
    evaluator: object = None  # callable pts (..., dim) -> complex array

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=complex)
        if vals.shape != self.grid.shape:
            raise ValueError(f"values shape {vals.shape} != grid shape {self.grid.shape}")
        if not np.all(np.isfinite(vals.view(float))):
            raise ValueError("symbol values must be finite")
        object.__setattr__(self, "values", vals)
        if self.evaluator is not None:
            gap = self.node_agreement()
            if gap > 1e-12:
                raise ValueError(f"node values disagree with the evaluator by {gap}")

    @classmethod
    def from_evaluator(cls, grid: Grid, evaluator) -> "SampledSymbol":
        vals = np.asarray(evaluator(grid.nodes()), dtype=complex).reshape(grid.shape)
        return cls(grid=grid, values=vals, evaluator=evaluator)

    def at_origin(self) -> complex:
        return complex(self.values[self.grid.origin_index])

    def node_agreement(self) -> float:
        """Max |values - evaluator| over nodes; 0.0 when no evaluator is attached."""
        if self.evaluator is None:
            return 0.0
        resampled = np.asarray(self.evaluator(self.grid.nodes()), dtype=complex)
        return float(np.max(np.abs(resampled.reshape(self.grid.shape) - self.values)))


def evaluate_symbol(sym: SampledSymbol, pts: np.ndarray) -> np.ndarray:
    """Values at arbitrary points: analytic evaluator when present, else
    multilinear interpolation of the grid values with zero extension."""
    if sym.evaluator is not None:
        return np.asarray(sym.evaluator(pts), dtype=complex)
    return multilinear(sym.grid, sym.values, pts)


def multilinear(grid: Grid, values: np.ndarray, pts: np.ndarray) -> np.ndarray:
    pts = np.asarray(pts, dtype=float)
    d = grid.dim
    t = (pts + grid.half_width) / grid.h
    i0 = np.floor(t).astype(np.int64)
    frac = t - i0
    out = np.zeros(pts.shape[:-1], dtype=complex)
    for corner in range(1 << d):
        idx = []
        weight = np.ones(pts.shape[:-1])
        for axis in range(d):
            bit = (corner >> axis) & 1
            idx.append(i0[..., axis] + bit)
            weight = weight * (frac[..., axis] if bit else 1.0 - frac[..., axis])
        inside = np.ones(pts.shape[:-1], dtype=bool)
        for axis in range(d):
            inside &= (idx[axis] >= 0) & (idx[axis] < grid.points)
        clipped = tuple(np.clip(ix, 0, grid.points - 1) for ix in idx)
        out += np.where(inside, weight, 0.0) * values[clipped]
    return out


def lp_norm(sym: SampledSymbol, p: float, density: float = 1.0) -> float:
    """Discrete L^p norm with measure density * (cell volume) per node."""
    cell = density * sym.grid.cell_volume
    if p == float("inf"):
        return float(np.max(np.abs(sym.values)))
    return float((cell * np.sum(np.abs(sym.values) ** p)) ** (1.0 / p))


def l2_inner(a: SampledSymbol, b: SampledSymbol, density: float = 1.0) -> complex:
    if not a.grid.same_box(b.grid) or a.grid.dim != b.grid.dim:
        raise GridMismatch("inner product needs matching grids")
    return complex(density * a.grid.cell_volume * np.sum(a.values * np.conj(b.values)))


def symbol_check_involution(sym: SampledSymbol) -> SampledSymbol:
    """The involution b -> conj(b(-x)).

    Node negation maps index k to N-k; the single -L boundary layer has no
    mirror node and is filled from the evaluator when available, else zero.
    """
    grid = sym.grid
    n = grid.points
    vals = sym.values
    out = np.zeros_like(vals)
    inner = (slice(1, None),) * grid.dim
    rev = (slice(None, 0, -1),) * grid.dim
    out[inner] = np.conj(vals[rev])
    if sym.evaluator is not None:
        mask_axes = [np.arange(n) == 0 for _ in range(grid.dim)]
        mesh = np.meshgrid(*([grid.axis] * grid.dim), indexing="ij")
        boundary = np.zeros(grid.shape, dtype=bool)
        for axis in range(grid.dim):
            sel = [slice(None)] * grid.dim
            sel[axis] = 0
            boundary[tuple(sel)] = True
        pts = np.stack([m[boundary] for m in mesh], axis=-1)
        out[boundary] = np.conj(np.asarray(sym.evaluator(-pts), dtype=complex))
    new_eval = None
    if sym.evaluator is not None:
        ev = sym.evaluator
        new_eval = lambda pts: np.conj(np.asarray(ev(-np.asarray(pts)), dtype=complex))
    return SampledSymbol(grid=grid, values=out, evaluator=new_eval)


@dataclass(frozen=True)
class TorusGridFunction:
    """Function on (circle) x (box grid): K uniform angles, normalized measure."""

    grid: Grid
    angles: int
    values: np.ndarray  # shape (angles,) + grid.shape

    def __post_init__(self):
        if self.angles < 8:
            raise ValueError("need at least 8 angle samples")
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.angles,) + self.grid.shape:
            raise ValueError("torus values shape mismatch")
        object.__setattr__(self, "values", vals)

    @cached_property
    def angle_samples(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.arange(self.angles) / self.angles)


def torus_lp_norm(fun: TorusGridFunction, p: float, density: float = 1.0) -> float:
    cell = density * fun.grid.cell_volume / fun.angles
    if p == float("inf"):
        return float(np.max(np.abs(fun.values)))
    return float((cell * np.sum(np.abs(fun.values) ** p)) ** (1.0 / p))
