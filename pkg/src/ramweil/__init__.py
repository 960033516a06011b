"""Exact verification of Weil representation decompositions over ramified
finite chain rings.

The base ring is R = Z/p^ell (p an odd prime) and A = R[X]/(X^2 - p, X^{2ell-1})
is its ramified quadratic extension with odd nilpotency length.  The package
builds the skew-hermitian A-module V = A^{2n}, the unitary/symplectic groups
acting on it, the Heisenberg group and its Schroedinger representation, and
the Weil operators, and checks every orbit count, constituent dimension and
commutant dimension mechanically at desk scale.
"""

from .rings import RingParams, AElem
from .space import HVector

__all__ = ["RingParams", "AElem", "HVector"]
__version__ = "0.1.0"
