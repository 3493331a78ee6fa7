"""Sparse multivariate polynomials over the rationals.

Just enough ring structure to push coordinate variables through the BCH
series, producing exact closed forms for the group cocycle and the reduced
product, plus compilation to vectorized numpy evaluators for grid work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

Monomial = tuple[int, ...]  # exponents per variable


@dataclass(frozen=True)
class Poly:
    nvars: int
    terms: tuple[tuple[Monomial, Fraction], ...]  # sorted, nonzero coefficients

    @staticmethod
    def _make(nvars: int, data: dict[Monomial, Fraction]) -> "Poly":
        return Poly(nvars, tuple(sorted((m, c) for m, c in data.items() if c != 0)))

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, ())

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return cls.zero(nvars)
        return cls(nvars, (((0,) * nvars, c),))

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        m = tuple(1 if v == index else 0 for v in range(nvars))
        return cls(nvars, ((m, Fraction(1)),))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        data = dict(self.terms)
        for m, c in other.terms:
            data[m] = data.get(m, Fraction(0)) + c
        return Poly._make(self.nvars, data)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            if c0 == 0:
                return Poly.zero(self.nvars)
            return Poly(self.nvars, tuple((m, c * c0) for m, c in self.terms))
        other = self._coerce(other)
        data: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                data[m] = data.get(m, Fraction(0)) + c1 * c2
        return Poly._make(self.nvars, data)

    __rmul__ = __mul__

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Poly.constant(self.nvars, other)

    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def evaluate_exact(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms:
            val = c
            for v, e in enumerate(m):
                for _ in range(e):
                    val *= point[v]
            total += val
        return total

    def compile(self):
        """Vectorized evaluator: takes a list of nvars equally-shaped arrays."""
        spec = [(float(c), tuple((v, e) for v, e in enumerate(m) if e))
                for m, c in self.terms]

        def evaluate(varlist):
            if not spec:
                return np.zeros(np.broadcast(*varlist).shape if varlist else ())
            acc = None
            for coef, powers in spec:
                term = np.full_like(np.asarray(varlist[0], dtype=float), coef) \
                    if not powers else None
                if powers:
                    term = coef
                    for v, e in powers:
                        term = term * np.asarray(varlist[v], dtype=float) ** e
                acc = term if acc is None else acc + term
            return acc

        return evaluate

    def bilinear_matrix(self, d: int) -> np.ndarray | None:
        """If the polynomial is sum_{a,b} A[a,b] x_a y_b over 2d variables
        (x = vars 0..d-1, y = vars d..2d-1), return A; else None."""
        if self.nvars != 2 * d:
            return None
        A = np.zeros((d, d))
        for m, c in self.terms:
            if sum(m) != 2:
                return None
            left = [v for v in range(d) if m[v]]
            right = [v for v in range(d, 2 * d) if m[v]]
            if len(left) != 1 or len(right) != 1 or m[left[0]] != 1 or m[right[0]] != 1:
                return None
            A[left[0], right[0] - d] = float(c)
        return A
