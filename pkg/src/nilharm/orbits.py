"""Coadjoint-orbit machinery over a fixed functional.

Isotropy algebras, jump indices with respect to a flag, the predual
decomposition, flat-orbit detection, and the polynomial group cocycle
obtained by pairing the functional with the central component of the BCH
product of predual elements.  All identities here are exact rational facts.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import bch as _bch
from . import exactlinalg as ela
from . import lie_core as lc
from .polymap import Poly
from .rationals import Vector, dot, vec_neg


class PairingNotOne(Exception):
    pass


class NotFlat(Exception):
    pass


@dataclass(frozen=True)
class Functional:
    """Element of the dual space, coordinates in the dual of the fixed basis."""

    coords: Vector

    def pair(self, v: Vector) -> Fraction:
        return dot(self.coords, v)

    @classmethod
    def dual_basis_vector(cls, n: int, index: int = 0) -> "Functional":
        return cls(tuple(Fraction(1) if t == index else Fraction(0) for t in range(n)))


def isotropy_algebra(L: lc.LieAlgebra, xi0: Functional) -> list[Vector]:
    """{X : xi0([X, .]) = 0}: exact nullspace of the skew pairing matrix."""
    n = L.dim
    rows = []
    for j in range(n):
        row = [xi0.pair(L.basis_bracket(i, j)) for i in range(n)]
        if any(row):
            rows.append(row)
    if not rows:
        return [tuple(Fraction(1) if t == s else Fraction(0) for t in range(n))
                for s in range(n)]
    return ela.nullspace(rows, n_cols=n)


@dataclass(frozen=True)
class OrbitData:
    """Jump-index data of the orbit through xi0 with respect to a flag.

    jump_set is 1-based to match the X_1..X_n basis labelling; the predual
    basis lists the flag vectors at the jump positions in increasing order.
    """

    algebra: lc.LieAlgebra
    flag: lc.FlagSequence
    xi0: Functional
    isotropy_basis: tuple[Vector, ...]
    jump_set: tuple[int, ...]
    predual_basis: tuple[Vector, ...]
    flat: bool

    @property
    def d(self) -> int:
        return len(self.jump_set)

    @cached_property
    def _split_rows(self) -> list[list[Fraction]]:
        # Columns: predual basis vectors then the flag's first (central) vector.
        cols = list(self.predual_basis) + [self.flag.vectors[0]]
        n = self.algebra.dim
        return [[cols[c][r] for c in range(len(cols))] for r in range(n)]

    @cached_property
    def _split_inverse(self) -> list[Vector]:
        """Columns of the inverse split matrix, one per ambient coordinate."""
        n = self.algebra.dim
        cols = []
        for t in range(n):
            rhs = tuple(Fraction(1) if r == t else Fraction(0) for r in range(n))
            sol = ela.solve(self._split_rows, rhs)
            if sol is None:
                raise AssertionError("split basis is not spanning")
            cols.append(sol)
        return cols

    def embed(self, x: Vector) -> Vector:
        """Predual coordinates -> ambient coordinates."""
        n = self.algebra.dim
        out = [Fraction(0)] * n
        for a, xa in enumerate(x):
            if xa:
                pa = self.predual_basis[a]
                for t in range(n):
                    out[t] += xa * pa[t]
        return tuple(out)

    def split(self, w: Vector) -> tuple[Vector, Fraction]:
        """Ambient vector -> (predual coordinates, central coordinate)."""
        if not self.flat:
            raise NotFlat("central splitting requires a flat orbit")
        n = self.algebra.dim
        cols = self._split_inverse
        x = [Fraction(0)] * n
        for t in range(n):
            wt = w[t]
            if wt:
                col = cols[t]
                for r in range(n):
                    if col[r]:
                        x[r] += wt * col[r]
        return tuple(x[:self.d]), x[self.d]


def jump_indices(L: lc.LieAlgebra, flag: lc.FlagSequence, xi0: Functional) -> OrbitData:
    """Jump indices e = {j : X_j escapes g_{j-1} + isotropy}, with the
    direct-sum and flatness invariants verified exactly."""
    if xi0.pair(flag.vectors[0]) != 1:
        raise PairingNotOne("the functional must pair to 1 with the first flag vector")
    iso = isotropy_algebra(L, xi0)
    jump: list[int] = []
    for j in range(1, L.dim + 1):
        lower = list(flag.vectors[:j - 1]) + list(iso)
        xj = flag.vectors[j - 1]
        base_rank = ela.rank(lower) if lower else 0
        if ela.rank(lower + [xj]) > base_rank:
            jump.append(j)
    predual = tuple(flag.vectors[j - 1] for j in jump)
    if len(iso) + len(predual) != L.dim:
        raise AssertionError("isotropy and predual dimensions do not sum to dim")
    full = [list(v) for v in list(iso) + list(predual)]
    if ela.det(full) == 0:
        raise AssertionError("isotropy + predual is not a direct sum")
    ctr = lc.center(L)
    flat = len(ctr) == 1 and ela.subspace_equal(list(iso), ctr)
    return OrbitData(algebra=L, flag=flag, xi0=xi0, isotropy_basis=tuple(iso),
                     jump_set=tuple(jump), predual_basis=predual, flat=flat)


def product_e(orbit: OrbitData, x: Vector, y: Vector) -> Vector:
    """Projection of the BCH product of predual elements back onto the predual."""
    if not orbit.flat:
        raise NotFlat("the reduced product requires a flat orbit")
    w = lc.bch_product(orbit.algebra, orbit.embed(x), orbit.embed(y))
    return orbit.split(w)[0]


def alpha(orbit: OrbitData, x: Vector, y: Vector) -> Fraction:
    """Central pairing of the BCH product: the additive group cocycle."""
    if not orbit.flat:
        raise NotFlat("the cocycle requires a flat orbit")
    w = lc.bch_product(orbit.algebra, orbit.embed(x), orbit.embed(y))
    c = orbit.split(w)[1]
    return c * orbit.xi0.pair(orbit.flag.vectors[0])


def product_and_alpha(orbit: OrbitData, x: Vector, y: Vector) -> tuple[Vector, Fraction]:
    if not orbit.flat:
        raise NotFlat("the reduced product requires a flat orbit")
    w = lc.bch_product(orbit.algebra, orbit.embed(x), orbit.embed(y))
    xy, c = orbit.split(w)
    return xy, c * orbit.xi0.pair(orbit.flag.vectors[0])


def verify_cocycle_identity(orbit: OrbitData, x: Vector, y: Vector, z: Vector) -> bool:
    """alpha(x,y) + alpha(x*y, z) == alpha(x, y*z) + alpha(y, z), exactly."""
    xy, a_xy = product_and_alpha(orbit, x, y)
    yz, a_yz = product_and_alpha(orbit, y, z)
    lhs = a_xy + alpha(orbit, xy, z)
    rhs = alpha(orbit, x, yz) + a_yz
    return lhs == rhs


def gamma_identities(orbit: OrbitData, x: Vector, y: Vector, z: Vector) -> dict:
    """The five unit-circle cocycle identities for gamma = exp(i alpha).

    Each identity is checked twice: the additive counterpart exactly in
    rational arithmetic, and the multiplicative form in complex floating
    arithmetic (residual = |lhs - rhs|).
    """
    def a(u, v):
        return alpha(orbit, u, v)

    def p(u, v):
        return product_e(orbit, u, v)

    def g(val: Fraction) -> complex:
        return cmath.exp(1j * float(val))

    nx, ny, nz = vec_neg(x), vec_neg(y), vec_neg(z)
    additive = {
        "product_rule": a(x, y) + a(p(x, y), z) == a(x, p(y, z)) + a(y, z),
        "inverse_reversal": a(ny, nx) == -a(x, y),
        "right_cancel": a(p(x, ny), y) == -a(x, ny),
        "left_cancel": a(x, p(nx, y)) == -a(nx, y),
        "difference_rule": a(x, nz) + a(p(x, nz), p(z, ny)) == a(x, ny) + a(y, nz),
    }
    multiplicative = {
        "product_rule": abs(g(a(x, y)) * g(a(p(x, y), z))
                            - g(a(x, p(y, z))) * g(a(y, z))),
        "inverse_reversal": abs(g(a(ny, nx)) - 1 / g(a(x, y))),
        "right_cancel": abs(g(a(p(x, ny), y)) - 1 / g(a(x, ny))),
        "left_cancel": abs(g(a(x, p(nx, y))) - 1 / g(a(nx, y))),
        "difference_rule": abs(g(a(x, nz)) * g(a(p(x, nz), p(z, ny)))
                               - g(a(x, ny)) * g(a(y, nz))),
    }
    return {"additive_exact": additive, "multiplicative_residual": multiplicative}


# ---------------------------------------------------------------------------
# Polynomial closed forms and predual structure
# ---------------------------------------------------------------------------


def _bch_polynomial_split(orbit: OrbitData) -> tuple[list[Poly], Poly]:
    """Exact polynomials for the reduced product (d components) and the cocycle,
    as functions of (x_1..x_d, y_1..y_d)."""
    if not orbit.flat:
        raise NotFlat("polynomial twist data requires a flat orbit")
    L = orbit.algebra
    d, n = orbit.d, L.dim
    nv = 2 * d
    zero = Poly.zero(nv)
    xs = [Poly.variable(nv, a) for a in range(d)]
    ys = [Poly.variable(nv, d + a) for a in range(d)]

    def embed(coeffs) -> list[Poly]:
        out = [zero] * n
        for a in range(d):
            pa = orbit.predual_basis[a]
            for t in range(n):
                if pa[t]:
                    out[t] = out[t] + coeffs[a] * pa[t]
        return out

    fraction_entries = L.entries
    w = _bch.bch_apply_generic(fraction_entries, n, max(L.step, 1),
                               embed(xs), embed(ys), zero)
    # Split the polynomial vector with the exact inverse matrix.
    inv_cols = orbit._split_inverse
    product_polys = []
    for a in range(d):
        acc = zero
        for t in range(n):
            coeff = inv_cols[t][a]
            if coeff and w[t]:
                acc = acc + w[t] * coeff
        product_polys.append(acc)
    central = zero
    for t in range(n):
        coeff = inv_cols[t][d]
        if coeff and w[t]:
            central = central + w[t] * coeff
    alpha_poly = central * orbit.xi0.pair(orbit.flag.vectors[0])
    return product_polys, alpha_poly


def alpha_polynomial(orbit: OrbitData) -> Poly:
    return _bch_polynomial_split(orbit)[1]


def product_polynomials(orbit: OrbitData) -> list[Poly]:
    return _bch_polynomial_split(orbit)[0]


def predual_algebra(orbit: OrbitData) -> lc.LieAlgebra:
    """The quotient Lie algebra structure carried by predual coordinates."""
    if not orbit.flat:
        raise NotFlat("the predual group structure requires a flat orbit")
    d = orbit.d
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(d):
        for b in range(a + 1, d):
            ea = tuple(Fraction(1) if t == a else Fraction(0) for t in range(d))
            eb = tuple(Fraction(1) if t == b else Fraction(0) for t in range(d))
            w = lc.bracket(orbit.algebra, orbit.embed(ea), orbit.embed(eb))
            coords, _ = orbit.split(w)
            terms = {k: c for k, c in enumerate(coords) if c != 0}
            if terms:
                brackets[(a, b)] = terms
    return lc.validate(d, brackets)


def predual_weights(orbit: OrbitData) -> tuple[int, ...]:
    """Weight of each predual coordinate: its depth in the lower central
    series of the predual group (1 for generators, 2 for first commutators, ...)."""
    Q = predual_algebra(orbit)
    series = lc.lower_central_series(Q)
    weights = []
    for a in range(Q.dim):
        ea = tuple(Fraction(1) if t == a else Fraction(0) for t in range(Q.dim))
        w = 1
        for k in range(1, len(series)):
            if series[k] and ela.in_span(list(series[k]), ea):
                w = k + 1
        weights.append(w)
    return tuple(weights)


def standard_orbit(L: lc.LieAlgebra, xi0: Functional | None = None,
                   preferred_first: Vector | None = None) -> OrbitData:
    """Convenience: flag with a central first vector and the dual functional.

    By default the flag starts at the canonical central vector and xi0 is
    read off as the dual coordinate vector pairing to 1 with it.
    """
    if preferred_first is None and len(lc.center(L)) >= 1:
        preferred_first = lc.center(L)[0]
    flag = lc.jordan_holder_flag(L, preferred_first=preferred_first)
    if xi0 is None:
        x1 = flag.vectors[0]
        idx = next(t for t in range(L.dim) if x1[t] != 0)
        coords = [Fraction(0)] * L.dim
        coords[idx] = 1 / x1[idx]
        xi0 = Functional(tuple(coords))
    return jump_indices(L, flag, xi0)
