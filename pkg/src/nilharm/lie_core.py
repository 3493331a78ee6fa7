"""Exact-rational nilpotent Lie algebra arithmetic.

Structure constants are given for basis pairs i < j only (lower pairs follow
by antisymmetry), validated once against the Jacobi identity and nilpotency,
and then shared immutably by everything downstream: central series, flags
adapted to chains of ideals, truncated BCH products, derivation algebras and
characteristic-nilpotency certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from . import bch as _bch
from . import exactlinalg as ela
from .rationals import Vector, is_zero_vector, vec_add, zero_vector

Terms = tuple[tuple[int, Fraction], ...]
Entry = tuple[int, int, Terms]


class JacobiViolation(Exception):
    """Jacobi identity fails on a basis triple (1-based indices, residual vector)."""

    def __init__(self, i: int, j: int, k: int, residual: Vector):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(f"Jacobi identity fails on basis triple "
                         f"(X{i}, X{j}, X{k}); residual {residual}")


class NotNilpotent(Exception):
    """Lower central series stabilizes at a nonzero subspace."""

    def __init__(self, stable_dim: int):
        self.stable_dim = stable_dim
        super().__init__(f"lower central series stabilizes at dimension {stable_dim}")


class PreferredVectorNotCentral(Exception):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    """Validated nilpotent Lie algebra with exact rational structure constants."""

    dim: int
    entries: tuple[Entry, ...]          # (i, j, ((k, c), ...)) with i < j, 0-based
    labels: tuple[str, ...]
    step: int                            # nilpotency step

    @cached_property
    def _basis_brackets(self) -> dict[tuple[int, int], Vector]:
        out: dict[tuple[int, int], Vector] = {}
        for i, j, terms in self.entries:
            v = [Fraction(0)] * self.dim
            for k, c in terms:
                v[k] = c
            out[(i, j)] = tuple(v)
        return out

    @cached_property
    def _int_table(self) -> tuple[tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...], int]:
        den = 1
        for _, _, terms in self.entries:
            for _, c in terms:
                den = lcm(den, c.denominator)
        scaled = tuple(
            (i, j, tuple((k, int(c * den)) for k, c in terms))
            for i, j, terms in self.entries
        )
        return scaled, den

    def basis_bracket(self, i: int, j: int) -> Vector:
        """[X_i, X_j], any index order."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._basis_brackets.get((i, j), zero_vector(self.dim))
        v = self._basis_brackets.get((j, i))
        if v is None:
            return zero_vector(self.dim)
        return tuple(-a for a in v)

    def label(self, i: int) -> str:
        return self.labels[i]


def _normalize_entries(dim: int, brackets) -> tuple[Entry, ...]:
    """Accepts {(i, j): {k: c}} or iterable of (i, j, terms); indices 0-based."""
    items = brackets.items() if isinstance(brackets, dict) else [(p[0:2], p[2]) for p in brackets]
    seen: set[tuple[int, int]] = set()
    entries: list[Entry] = []
    for (i, j), terms in items:
        if not (0 <= i < j < dim):
            raise ValueError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
        if (i, j) in seen:
            raise ValueError(f"duplicate bracket pair ({i}, {j})")
        seen.add((i, j))
        term_items = terms.items() if isinstance(terms, dict) else terms
        clean = []
        seen_k: set[int] = set()
        for k, c in term_items:
            if not 0 <= k < dim:
                raise ValueError(f"target index {k} out of range")
            if k in seen_k:
                raise ValueError(f"duplicate target index {k} in pair ({i}, {j})")
            seen_k.add(k)
            c = Fraction(c)
            if c != 0:
                clean.append((k, c))
        if clean:
            entries.append((i, j, tuple(sorted(clean))))
    return tuple(sorted(entries))


def bracket(L: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """[x, y]: bilinear, antisymmetric, exact."""
    if len(x) != L.dim or len(y) != L.dim:
        raise ValueError("vector dimension does not match the algebra")
    out = [Fraction(0)] * L.dim
    for i, j, terms in L.entries:
        cross = x[i] * y[j] - x[j] * y[i]
        if cross:
            for k, c in terms:
                out[k] += cross * c
    return tuple(out)


def _series_from_entries(dim: int, entries: tuple[Entry, ...]) -> list[list[Vector]]:
    """Lower central series as rref bases; final element is the empty basis iff nilpotent."""
    basis_brackets: list[tuple[int, Vector]] = []
    for i, j, terms in entries:
        v = [Fraction(0)] * dim
        for k, c in terms:
            v[k] = c
        basis_brackets.append(((i, j), tuple(v)))

    def bracket_with_basis(i: int, v: Vector) -> Vector:
        out = [Fraction(0)] * dim
        for (a, b), w in basis_brackets:
            if v[b] != 0 and a == i:
                for k in range(dim):
                    out[k] += v[b] * w[k]
            if v[a] != 0 and b == i:
                for k in range(dim):
                    out[k] -= v[a] * w[k]
        return tuple(out)

    full = [tuple(Fraction(1) if t == s else Fraction(0) for t in range(dim)) for s in range(dim)]
    series = [full]
    current = full
    while True:
        generated = [
            bracket_with_basis(i, v)
            for i in range(dim)
            for v in current
        ]
        nxt = ela.span_basis(generated)
        series.append(nxt)
        if len(nxt) == len(current):
            break
        if not nxt:
            break
        current = nxt
    return series


def validate(dim: int, brackets, labels: tuple[str, ...] | None = None) -> LieAlgebra:
    """Validate a structure table: antisymmetry (by input form), Jacobi, nilpotency."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    entries = _normalize_entries(dim, brackets)
    if labels is None:
        labels = tuple(f"X{i + 1}" for i in range(dim))
    if len(labels) != dim:
        raise ValueError("labels length must equal dim")

    probe = LieAlgebra(dim=dim, entries=entries, labels=labels, step=0)
    basis = [tuple(Fraction(1) if t == s else Fraction(0) for t in range(dim)) for s in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                res = vec_add(
                    vec_add(
                        bracket(probe, basis[i], probe.basis_bracket(j, k)),
                        bracket(probe, basis[j], probe.basis_bracket(k, i)),
                    ),
                    bracket(probe, basis[k], probe.basis_bracket(i, j)),
                )
                if not is_zero_vector(res):
                    raise JacobiViolation(i + 1, j + 1, k + 1, res)

    series = _series_from_entries(dim, entries)
    if series[-1]:
        raise NotNilpotent(len(series[-1]))
    step = len(series) - 1
    return LieAlgebra(dim=dim, entries=entries, labels=labels, step=step)


def lower_central_series(L: LieAlgebra) -> list[list[Vector]]:
    """[g^0, g^1, ..., 0] as exact rref bases, g^k = [g, g^{k-1}]."""
    return _series_from_entries(L.dim, L.entries)


def nilpotency_step(L: LieAlgebra) -> int:
    return L.step


def center(L: LieAlgebra) -> list[Vector]:
    """{X : [X, g] = 0} via exact nullspace of the stacked adjoint maps."""
    rows: list[list[Fraction]] = []
    for j in range(L.dim):
        cols = [L.basis_bracket(i, j) for i in range(L.dim)]
        for k in range(L.dim):
            row = [cols[i][k] for i in range(L.dim)]
            if any(row):
                rows.append(row)
    if not rows:
        return [tuple(Fraction(1) if t == s else Fraction(0) for t in range(L.dim))
                for s in range(L.dim)]
    return ela.nullspace(rows, n_cols=L.dim)


@dataclass(frozen=True)
class FlagSequence:
    """Adapted basis X_1..X_n whose leading spans form a chain of ideals
    with one-dimensional quotients and [g, g_j] within g_{j-1}."""

    algebra: LieAlgebra
    vectors: tuple[Vector, ...]

    def ideal_basis(self, j: int) -> list[Vector]:
        return list(self.vectors[:j])

    def __post_init__(self):
        violations = flag_violations(self.algebra, self.vectors)
        if violations:
            raise ValueError(f"not a valid flag: {violations[0]}")


def flag_violations(L: LieAlgebra, vectors: tuple[Vector, ...]) -> list[str]:
    """Exact checks of the flag invariants; empty list when all hold."""
    out = []
    if len(vectors) != L.dim:
        return [f"expected {L.dim} vectors, got {len(vectors)}"]
    for j in range(1, L.dim + 1):
        if ela.rank(list(vectors[:j])) != j:
            out.append(f"leading {j} vectors are dependent")
            return out
    for j in range(1, L.dim + 1):
        lower = ela.span_basis(list(vectors[:j - 1]))
        for i in range(L.dim):
            basis_i = tuple(Fraction(1) if t == i else Fraction(0) for t in range(L.dim))
            w = bracket(L, basis_i, vectors[j - 1])
            if not ela.in_span(lower, w):
                out.append(f"[X{i + 1}, flag_{j}] escapes the lower ideal")
    return out


def jordan_holder_flag(L: LieAlgebra, preferred_first: Vector | None = None) -> FlagSequence:
    """Ascending central construction: pick a central vector, quotient, recurse.

    Tie-break among central vectors: the rref basis vector of the central
    preimage with the earliest pivot column not already spanned (pivot scaled
    to 1).  ``preferred_first`` overrides the first choice and must be central.
    """
    n = L.dim
    basis = [tuple(Fraction(1) if t == s else Fraction(0) for t in range(n)) for s in range(n)]
    chosen: list[Vector] = []
    if preferred_first is not None:
        for i in range(n):
            if not is_zero_vector(bracket(L, basis[i], preferred_first)):
                raise PreferredVectorNotCentral(
                    "requested first flag vector is not central")
        chosen.append(preferred_first)
    while len(chosen) < n:
        span = ela.span_basis(chosen) if chosen else []
        red, piv = (ela.rref(span) if span else ([], []))

        def reduce_mod_span(w: Vector) -> list[Fraction]:
            w = list(w)
            for r, pc in enumerate(piv):
                f = w[pc]
                if f:
                    for t in range(n):
                        w[t] -= f * red[r][t]
            return w

        # Preimage of the center of g / span(chosen): [X_i, v] inside span(chosen).
        rows: list[list[Fraction]] = []
        for i in range(n):
            reduced_cols = [reduce_mod_span(bracket(L, basis[i], basis[s]))
                            for s in range(n)]
            for k in range(n):
                if k in piv:
                    continue
                row = [reduced_cols[s][k] for s in range(n)]
                if any(row):
                    rows.append(row)
        candidates = ela.nullspace(rows, n_cols=n) if rows else list(basis)
        picked = None
        for v in ela.span_basis(candidates):
            if not ela.in_span(span, v):
                picked = v
                break
        if picked is None:
            raise AssertionError("central refinement stalled on a nilpotent algebra")
        chosen.append(picked)
    return FlagSequence(algebra=L, vectors=tuple(chosen))


def bch_product(L: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """Group product in exponential coordinates: Dynkin series truncated at the step."""
    if len(x) != L.dim or len(y) != L.dim:
        raise ValueError("vector dimension does not match the algebra")
    entries, den = L._int_table
    return _bch.bch_apply(entries, L.dim, den, max(L.step, 1),
                          _bch.to_intvec(x), _bch.to_intvec(y))


Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class DerivationSpace:
    """Basis of Der(g); matrices act on coordinate columns (D X_i = sum_k D[k][i] X_k)."""

    algebra: LieAlgebra
    basis: tuple[Matrix, ...]


def derivation_space(L: LieAlgebra) -> DerivationSpace:
    """Exact basis of the Leibniz-identity solution space, by fraction-free elimination."""
    n = L.dim
    rows: list[list[Fraction]] = []
    for i in range(n):
        for j in range(i + 1, n):
            bij = L.basis_bracket(i, j)
            for m in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    if bij[k]:
                        row[m * n + k] += bij[k]          # (D [Xi, Xj])_m
                    bkj = L.basis_bracket(k, j)
                    if bkj[m]:
                        row[k * n + i] -= bkj[m]          # -([D Xi, Xj])_m
                    bik = L.basis_bracket(i, k)
                    if bik[m]:
                        row[k * n + j] -= bik[m]          # -([Xi, D Xj])_m
                if any(row):
                    rows.append(row)
    if rows:
        flat_basis = ela.nullspace(rows, n_cols=n * n)
    else:
        flat_basis = [tuple(Fraction(1) if t == s else Fraction(0) for t in range(n * n))
                      for s in range(n * n)]
    mats = tuple(
        tuple(tuple(v[r * n + c] for c in range(n)) for r in range(n))
        for v in flat_basis
    )
    return DerivationSpace(algebra=L, basis=mats)


def leibniz_residual(L: LieAlgebra, D: Matrix, i: int, j: int) -> Vector:
    """D[Xi,Xj] - [D Xi, Xj] - [Xi, D Xj], exact."""
    n = L.dim
    bij = L.basis_bracket(i, j)
    lhs = tuple(sum((D[m][k] * bij[k] for k in range(n)), Fraction(0)) for m in range(n))
    dxi = tuple(D[k][i] for k in range(n))
    dxj = tuple(D[k][j] for k in range(n))
    basis_i = tuple(Fraction(1) if t == i else Fraction(0) for t in range(n))
    basis_j = tuple(Fraction(1) if t == j else Fraction(0) for t in range(n))
    rhs = vec_add(bracket(L, dxi, basis_j), bracket(L, basis_i, dxj))
    return tuple(a - b for a, b in zip(lhs, rhs))


@dataclass(frozen=True)
class EngelCertificate:
    """Outcome of simultaneous strict triangularization of the derivation space."""

    success: bool
    flag: tuple[Vector, ...] | None = None
    failed_stage: int | None = None


def _mat_vec(M, v):
    return tuple(sum((M[r][c] * v[c] for c in range(len(v))), Fraction(0))
                 for r in range(len(M)))


def is_characteristically_nilpotent(derivs: DerivationSpace) -> EngelCertificate:
    """Engel-style flag extraction on the derivation space.

    SUCCESS returns a full common flag (every derivation strictly triangular,
    hence nilpotent); FAILURE reports the stage where the common kernel is
    trivial, which certifies that a non-nilpotent derivation exists.
    """
    L = derivs.algebra
    n = L.dim
    if not derivs.basis:
        # Zero derivation space is vacuously nilpotent (cannot occur for dim >= 1).
        return EngelCertificate(success=True, flag=())
    mats = [list(map(list, D)) for D in derivs.basis]
    lifts = [tuple(Fraction(1) if t == s else Fraction(0) for t in range(n))
             for s in range(n)]
    flag: list[Vector] = []
    dim_q = n
    for stage in range(n):
        stacked = [row for M in mats for row in M]
        kernel = ela.nullspace(stacked, n_cols=dim_q) if stacked else \
            [tuple(Fraction(1) if t == s else Fraction(0) for t in range(dim_q))
             for s in range(dim_q)]
        if not kernel:
            return EngelCertificate(success=False, failed_stage=stage)
        v = kernel[0]
        flag.append(tuple(sum((v[c] * lifts[c][t] for c in range(dim_q)), Fraction(0))
                          for t in range(n)))
        if dim_q == 1:
            break
        p = next(c for c in range(dim_q) if v[c] != 0)
        keep = [c for c in range(dim_q) if c != p]
        new_lifts = [lifts[c] for c in keep]
        new_mats = []
        for M in mats:
            cols = []
            for c in keep:
                w = [M[r][c] for r in range(dim_q)]
                f = w[p] / v[p]
                if f:
                    w = [a - f * b for a, b in zip(w, v)]
                cols.append([w[r] for r in keep])
            new_mats.append([[cols[cc][rr] for cc in range(len(keep))]
                             for rr in range(len(keep))])
        mats = new_mats
        lifts = new_lifts
        dim_q -= 1
    return EngelCertificate(success=True, flag=tuple(flag))
