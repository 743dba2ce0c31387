"""Divisor calculus for hyperelliptic d-osculating covers of an elliptic curve."""

__version__ = "0.1.0"

from .builder import (
    EpsilonChoice,
    FamilySpec,
    build_family,
    closed_form_degree,
    degree_genus_of,
    gamma_of,
    lambda_class,
    membership_report,
    z_class,
)
from .errors import ConstructionInconsistency, DataError, DomainError, LatticeError
from .halfperiod import HalfPeriod, add, torsion_of_fibers
from .piclattice import PicClass, adjunction_genus, canonical_class, intersect, lin_equiv
from .typesystem import CoverSpec, TypeVector, check_cover, osculating_gap_order

__all__ = [
    "ConstructionInconsistency", "CoverSpec", "DataError", "DomainError", "EpsilonChoice",
    "FamilySpec", "HalfPeriod", "LatticeError", "PicClass", "TypeVector", "add",
    "adjunction_genus", "build_family", "canonical_class", "check_cover", "closed_form_degree",
    "degree_genus_of", "gamma_of", "intersect", "lambda_class", "lin_equiv", "membership_report",
    "osculating_gap_order", "torsion_of_fibers", "z_class",
]
