"""Exact arithmetic core: scalars, matrices, polynomials, dual numbers."""
from .scalars import QI, I, conj, format_scalar, parse_scalar, to_scalar, sort_key
from .matrix import Matrix, commutator, block
from .poly import UniPoly, gcd, xgcd
from .multipoly import MultiPoly
from .dual import Dual
from .linalg import (
    Span,
    charpoly,
    det,
    eval_poly_pair,
    eval_unipoly,
    inverse,
    is_nilpotent,
    jordan_chevalley,
    jordan_chevalley_poly,
    kernel_basis,
    minimal_polynomial,
    rank,
    rref,
    solve,
)

__all__ = [
    "QI", "I", "conj", "format_scalar", "parse_scalar", "to_scalar", "sort_key",
    "Matrix", "commutator", "block", "UniPoly", "gcd", "xgcd", "MultiPoly", "Dual",
    "Span", "charpoly", "det", "eval_poly_pair", "eval_unipoly", "inverse",
    "is_nilpotent", "jordan_chevalley", "jordan_chevalley_poly", "kernel_basis",
    "minimal_polynomial", "rank", "rref", "solve",
]
