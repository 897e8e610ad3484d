"""Exact scalars and dense matrices over Q, F_p and simple extensions."""
from ._backend import BACKEND
from .fields import (
    ExtElement,
    Field,
    PrimeField,
    Rationals,
    Scalar,
    SimpleExtension,
    field_from_spec,
    field_to_spec,
    is_prime,
    scalar_arith,
)
from .matrix import (
    AffineSolution,
    Matrix,
    apply_kron,
    exact_tensordot,
    hstack,
    invert,
    is_invertible,
    kron,
    kron_all,
    linear_map_matrix,
    mat_mul,
    nullspace,
    rank,
    rref,
    solve_affine,
    swap,
    tensor_permutation,
    vstack,
)

__all__ = [
    "BACKEND", "ExtElement", "Field", "PrimeField", "Rationals", "Scalar", "SimpleExtension",
    "field_from_spec", "field_to_spec", "is_prime", "scalar_arith", "AffineSolution", "Matrix", "exact_tensordot", "apply_kron",
    "hstack", "invert", "is_invertible", "kron", "kron_all", "linear_map_matrix", "mat_mul", "nullspace", "rank",
    "rref", "solve_affine", "swap", "tensor_permutation", "vstack",
]
