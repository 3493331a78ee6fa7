"""nilharm: exact nilpotent Lie algebra computations, coadjoint-orbit
cocycles, numerical twisted convolution with a Weyl-type operator transform,
and twisted Calderon-Zygmund decompositions.

Layered design: everything on the algebra side (structure constants, BCH
products, flags, derivations, orbit data, cocycles) is exact over the
rationals; the grid side (symbols, convolution, operator kernels, coverings)
is floating-point with measured constants and residuals.
"""

from .reports import VERSION as __version__

__all__ = [
    "bch",
    "catalog",
    "czdecomp",
    "exactlinalg",
    "fileio",
    "funcs",
    "grids",
    "lie_core",
    "multipliers",
    "orbits",
    "pedersen",
    "polymap",
    "rationals",
    "reports",
    "seeds",
    "symplectic",
    "twist",
    "verify",
]
