"""Exact computations with orthosymmetric products on finite-dimensional rational vector lattices."""

from .errors import (AxiomViolation, DimensionMismatch, EnumerationBoundExceeded, NoAdjointError,
                     NotPositive, OrthoError, UnsupportedInstance, UnverifiedProduct)
from .exact import RatMatrix, kernel_basis, rank, rref, solve_linear
from .lattice import Element, LatticeSpace, OrderKind, absolute, lattice_inf, lattice_sup
from .operators import (AdjointKind, AdjointResult, ClassificationReport, RegularOperator, adjoint,
                        classify, is_interval_preserving, is_lattice_hom, is_normal, is_orthomorphism,
                        phi, rk_abs)
from .product import OrthoProduct, evaluate, is_definite, neutral_basis, quotient, verify

__all__ = [
    "AdjointKind", "AdjointResult", "AxiomViolation", "ClassificationReport", "DimensionMismatch",
    "Element", "EnumerationBoundExceeded", "LatticeSpace", "NoAdjointError", "NotPositive",
    "OrderKind", "OrthoError", "OrthoProduct", "RatMatrix", "RegularOperator", "UnsupportedInstance",
    "UnverifiedProduct", "absolute", "adjoint", "classify", "evaluate", "is_definite",
    "is_interval_preserving", "is_lattice_hom", "is_normal", "is_orthomorphism", "kernel_basis",
    "lattice_inf", "lattice_sup", "neutral_basis", "phi", "quotient", "rank", "rk_abs", "rref",
    "solve_linear", "verify",
]
