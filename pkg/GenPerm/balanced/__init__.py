"""
GenPerm Balanced Module

- vectors: vectores/multiconjuntos balanceados, complejidad, irreducibilidad
- enumeration: irreducibles por el cono y por soportes (deben coincidir)
- experiments: determinantes de matrices 0/1 y búsqueda de Z-irreducibles
"""

from GenPerm.balanced.vectors import (
    BalancedCertificate, BalancedVector, SubsetMultiset, balance_of, complexity_of_balanced,
    find_balanced_submultiset, is_irreducible_balanced, is_z_irreducible, nonempty_subsets,
    primitive_vector, support_independent,
)
from GenPerm.balanced.experiments import (
    DeterminantStats, LinearCongruential, ZSearchResult, determinant_distribution_check,
    determinant_experiment, max_zero_one_determinant, row_operation_check, z_irreducible_search,
)
from GenPerm.balanced.enumeration import (
    BalancedBoundReport, SupportSolution, balanced_cone, complexity_from_support,
    enumerate_irreducible_balanced, support_count_bound, verify_complexity_bound,
)

__all__ = [
    'BalancedCertificate',
    'BalancedVector',
    'SubsetMultiset',
    'balance_of',
    'complexity_of_balanced',
    'find_balanced_submultiset',
    'is_irreducible_balanced',
    'is_z_irreducible',
    'nonempty_subsets',
    'primitive_vector',
    'support_independent',
    'DeterminantStats',
    'LinearCongruential',
    'ZSearchResult',
    'determinant_distribution_check',
    'determinant_experiment',
    'max_zero_one_determinant',
    'row_operation_check',
    'z_irreducible_search',
    'BalancedBoundReport',
    'SupportSolution',
    'balanced_cone',
    'complexity_from_support',
    'enumerate_irreducible_balanced',
    'support_count_bound',
    'verify_complexity_bound',
]
