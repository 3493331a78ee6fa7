"""Symplectic 2-cocycles, 1-dimensional central extensions, and example families.

A skew form on a nilpotent algebra that satisfies the cocycle identity yields
a central extension with one added generator; when the form is nondegenerate
the extension has 1-dimensional center and its step grows by exactly one.
Three concrete families live here: the 6-dimensional two-parameter family,
graph algebras with the even-dimension / per-component edge-count existence
criterion, and the fixed 8-dimensional algebra with no dilations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlinalg as ela
from . import lie_core as lc
from .rationals import Vector


class NotACocycle(Exception):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"form violates the 2-cocycle identity on basis triple {triple}")


class ZeroParameter(Exception):
    pass


@dataclass(frozen=True)
class SymplecticForm:
    """Skew-symmetric bilinear form on the basis of an algebra."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        for i in range(n):
            if len(self.matrix[i]) != n:
                raise ValueError("form matrix must be square")
            for j in range(n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError(f"form is not skew-symmetric at ({i}, {j})")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, x: Vector, y: Vector) -> Fraction:
        return sum(
            (x[i] * self.matrix[i][j] * y[j]
             for i in range(self.dim) for j in range(self.dim)
             if self.matrix[i][j] != 0),
            Fraction(0),
        )

    def is_nondegenerate(self) -> bool:
        return ela.det([list(row) for row in self.matrix]) != 0


def form_from_pairs(dim: int, pairs: dict[tuple[int, int], Fraction]) -> SymplecticForm:
    """Build a skew form from upper-triangular entries {(i, j): value}, 0-based, i < j."""
    m = [[Fraction(0)] * dim for _ in range(dim)]
    for (i, j), v in pairs.items():
        if not 0 <= i < j < dim:
            raise ValueError(f"pair ({i}, {j}) must satisfy 0 <= i < j < dim")
        v = Fraction(v)
        m[i][j] = v
        m[j][i] = -v
    return SymplecticForm(matrix=tuple(tuple(row) for row in m))


def is_two_cocycle(L0: lc.LieAlgebra, omega: SymplecticForm) -> tuple[bool, tuple[int, int, int] | None]:
    """Exact cyclic-sum check over all basis triples; reports the first violation."""
    if omega.dim != L0.dim:
        raise ValueError("form dimension does not match the algebra")
    n = L0.dim
    basis = [tuple(Fraction(1) if t == s else Fraction(0) for t in range(n)) for s in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = (omega(basis[i], L0.basis_bracket(j, k))
                     + omega(basis[j], L0.basis_bracket(k, i))
                     + omega(basis[k], L0.basis_bracket(i, j)))
                if s != 0:
                    return False, (i + 1, j + 1, k + 1)
    return True, None


def central_extension(L0: lc.LieAlgebra, omega: SymplecticForm) -> lc.LieAlgebra:
    """One added central generator, indexed first:
    [(t, x), (s, y)] = (omega(x, y), [x, y])."""
    ok, triple = is_two_cocycle(L0, omega)
    if not ok:
        raise NotACocycle(triple)
    n = L0.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j, terms in L0.entries:
        brackets[(i + 1, j + 1)] = {k + 1: c for k, c in terms}
    for i in range(n):
        for j in range(i + 1, n):
            w = omega.matrix[i][j]
            if w != 0:
                brackets.setdefault((i + 1, j + 1), {})[0] = w
    labels = ("Z",) + tuple(L0.labels)
    return lc.validate(n + 1, brackets, labels=labels)


# ---------------------------------------------------------------------------
# Graph algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Simple finite graph; vertices are strings, edges 2-element subsets."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertices")
        vs = set(self.vertices)
        seen = set()
        for e in self.edges:
            if len(e) != 2 or e[0] == e[1]:
                raise ValueError(f"not a simple edge: {e}")
            if e[0] not in vs or e[1] not in vs:
                raise ValueError(f"edge {e} uses unknown vertex")
            key = frozenset(e)
            if key in seen:
                raise ValueError(f"duplicate edge: {e}")
            seen.add(key)

    def components(self) -> list[set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        remaining = set(self.vertices)
        comps = []
        while remaining:
            start = min(remaining)
            comp, frontier = set(), {start}
            while frontier:
                v = frontier.pop()
                comp.add(v)
                frontier |= adj[v] - comp
            remaining -= comp
            comps.append(comp)
        return comps


def graph_lie_algebra(graph: Graph) -> lc.LieAlgebra:
    """2-step algebra of dim |V|+|E|: vertex generators bracket to edge generators.

    Generator order: vertices sorted, then edges sorted; deterministic tables.
    """
    verts = sorted(graph.vertices)
    edges = sorted(tuple(sorted(e)) for e in graph.edges)
    v_index = {v: i for i, v in enumerate(verts)}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for e_pos, (a, b) in enumerate(edges):
        i, j = v_index[a], v_index[b]
        brackets[(min(i, j), max(i, j))] = {len(verts) + e_pos: Fraction(1)}
    labels = tuple(verts) + tuple(f"{a}^{b}" for a, b in edges)
    return lc.validate(len(verts) + len(edges), brackets, labels=labels)


def symplectic_exists_graph(graph: Graph) -> bool:
    """Even total dimension, and per connected component |E_c| <= |V_c|."""
    if (len(graph.vertices) + len(graph.edges)) % 2 != 0:
        return False
    for comp in graph.components():
        n_edges = sum(1 for a, b in graph.edges if a in comp and b in comp)
        if n_edges > len(comp):
            return False
    return True


# ---------------------------------------------------------------------------
# Fixed example families
# ---------------------------------------------------------------------------


def family_g0st(s: Fraction, t: Fraction) -> tuple[lc.LieAlgebra, SymplecticForm]:
    """Two-parameter 6-dimensional 2-step family with its anti-diagonal form.

    Relations [X6,X5] = s X3, [X6,X4] = (s+t) X2, [X5,X4] = t X1;
    form omega(X1,X6) = omega(X2,X5) = omega(X3,X4) = 1.
    """
    s, t = Fraction(s), Fraction(t)
    if s == 0 or t == 0:
        raise ZeroParameter("family parameters must be nonzero")
    brackets = {
        (4, 5): {2: -s},          # [X5, X6] = -s X3
        (3, 5): {1: -(s + t)},    # [X4, X6] = -(s+t) X2
        (3, 4): {0: -t},          # [X4, X5] = -t X1
    }
    L0 = lc.validate(6, brackets)
    omega = form_from_pairs(6, {(0, 5): Fraction(1), (1, 4): Fraction(1),
                                (2, 3): Fraction(1)})
    return L0, omega


def example_nonhomog() -> lc.LieAlgebra:
    """Fixed 8-dimensional 7-step algebra all of whose derivations are nilpotent.

    [X1,Xk] = X_{k+1} for k = 2..7, [X2,X3] = X6+X7, [X2,X4] = X7+X8,
    [X2,X5] = X8.
    """
    one = Fraction(1)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {
        (0, k): {k + 1: one} for k in range(1, 7)
    }
    brackets[(1, 2)] = {5: one, 6: one}
    brackets[(1, 3)] = {6: one, 7: one}
    brackets[(1, 4)] = {7: one}
    return lc.validate(8, brackets)


def nonhomog_form(a: Fraction, b: Fraction) -> SymplecticForm:
    """Skew form on the 8-dimensional example; nondegenerate iff a*b != 0."""
    a, b = Fraction(a), Fraction(b)
    return form_from_pairs(8, {
        (0, 7): a, (1, 4): a, (1, 5): a,
        (1, 6): b, (2, 5): -b, (3, 4): b,
    })
