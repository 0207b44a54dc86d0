"""Exact differential-operator realisations of simple Lie algebras.

A parabolic subalgebra ``p`` of a simple Lie algebra ``g`` and a highest
weight ``lambda`` of its Levi factor determine an embedding of ``g`` into the
Weyl algebra ``W_n`` tensored with ``End V_lambda``, where ``n`` is the
dimension of the nilradical of ``p``.
"""
from .embedding import EmbeddingResult, embed
from .levimodule import LeviModule, build_irreducible, weyl_dimension
from .liealgebra import ChevalleyAlgebra, simple_lie_algebra, verify_jacobi
from .parabolic import ParabolicDatum, make_parabolic
from .polynomial import Poly, binomial_poly
from .rootsystem import RootSystem, SimpleType, build_root_system, graded_lex_compare
from .uea import UEAElement, reduce
from .verify import ClosureReport, action_oracle, lie_closure
from .weyl import WeylMatrixOperator, WeylOperator, format_weyl, format_weyl_matrix, omega

__version__ = "0.1.0"

__all__ = [
    "ChevalleyAlgebra",
    "ClosureReport",
    "EmbeddingResult",
    "LeviModule",
    "ParabolicDatum",
    "Poly",
    "RootSystem",
    "SimpleType",
    "UEAElement",
    "WeylMatrixOperator",
    "WeylOperator",
    "action_oracle",
    "binomial_poly",
    "build_irreducible",
    "build_root_system",
    "embed",
    "format_weyl",
    "format_weyl_matrix",
    "graded_lex_compare",
    "lie_closure",
    "make_parabolic",
    "omega",
    "reduce",
    "simple_lie_algebra",
    "verify_jacobi",
    "weyl_dimension",
]
