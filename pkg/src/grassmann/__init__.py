"""Grassmann algebra arithmetic, intersecting odd families, and exact
certificates for the counting argument behind small maximal commutative
subalgebras of G(4k+9)."""

from .exterior import GF3, QQ, AlgebraContext, Element, Field, commutator, mul_monomials, multiply
from .verdict import Verdict

__all__ = [
    "AlgebraContext", "Element", "Field", "GF3", "QQ", "Verdict",
    "commutator", "mul_monomials", "multiply",
]
__version__ = "0.1.0"
