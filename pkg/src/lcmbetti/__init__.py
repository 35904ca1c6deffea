"""Exact homological computations for monomial ideals.

The package computes multigraded Betti numbers through the homology of open
intervals in the lcm lattice, cross-checked by an independent Taylor-strand
oracle, and decides the combinatorial linearity and gcd-type conditions that
feed Golod certificates.
"""

from .errors import (
    DimensionMismatchError,
    DomainError,
    IdealFormatError,
    LcmBettiError,
    NonTotalOrderError,
    ResourceCapError,
    TheoremViolationError,
)
from .fields import GF2, QQ, FieldSpec
from .monomials import MonomialIdeal

__all__ = [
    "MonomialIdeal",
    "FieldSpec",
    "GF2",
    "QQ",
    "LcmBettiError",
    "DimensionMismatchError",
    "DomainError",
    "IdealFormatError",
    "NonTotalOrderError",
    "ResourceCapError",
    "TheoremViolationError",
]

__version__ = "0.1.0"
