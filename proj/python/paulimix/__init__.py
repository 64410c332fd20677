"""Optimal convex approximation of a qubit state by the six Pauli eigenstates.

Closed-form solver over the canonical octant plus independent numerical
oracles (exact cross-polytope projection, away-step Frank-Wolfe, lattice
grid search, KKT certification).
"""

from paulimix._core import *  # noqa: F401,F403
from paulimix._core import __version__  # noqa: F401
