from .linalg import (
    determinant, int_determinant, nullspace, rank, rank_mod_p, row_echelon, solve, transpose,
)

__all__ = [
    "determinant", "int_determinant", "nullspace", "rank", "rank_mod_p",
    "row_echelon", "solve", "transpose",
]
