"""
GenPerm Monotone Module

Funciones no decrecientes, anticadenas y su clasificación de irreducibles.
"""

from GenPerm.monotone.antichains import (
    Antichain, antichain_lower_bound, count_antichains, derivatives_nondecreasing,
    enumerate_antichains, is_irreducible_nondecreasing, is_nondecreasing, minimal_sets,
    monotone_functions, reducibility_witness, require_nondecreasing, up_function,
)

__all__ = [
    'Antichain',
    'antichain_lower_bound',
    'count_antichains',
    'derivatives_nondecreasing',
    'enumerate_antichains',
    'is_irreducible_nondecreasing',
    'is_nondecreasing',
    'minimal_sets',
    'monotone_functions',
    'reducibility_witness',
    'require_nondecreasing',
    'up_function',
]
