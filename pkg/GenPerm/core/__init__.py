"""
GenPerm Core Module

- subsets: máscaras, orden canónico y pares cercanos
- setfunction: SetFunction / ModularFunction
- checks: supermodularidad, modularidad, estandarización, derivadas
- polytope: vértices de permutoedros generalizados
"""

from GenPerm.core.subsets import (
    ClosePair, canonical_subsets, close_pair_index, close_pairs, elements_of,
    mask_from_elements, make_close_pair,
)
from GenPerm.core.setfunction import ModularFunction, SetFunction, modular, modular_part
from GenPerm.core.checks import (
    discrete_derivative, equivalent, is_constant, is_modular, is_standard,
    is_supermodular, is_supermodular_full, second_derivative_check, standardize,
    supermodularity_value,
)
from GenPerm.core.polytope import gp_vertices, in_polytope, permutohedron_from_point

__all__ = [
    'ClosePair',
    'canonical_subsets',
    'close_pair_index',
    'close_pairs',
    'elements_of',
    'mask_from_elements',
    'make_close_pair',
    'ModularFunction',
    'SetFunction',
    'modular',
    'modular_part',
    'discrete_derivative',
    'equivalent',
    'is_constant',
    'is_modular',
    'is_standard',
    'is_supermodular',
    'is_supermodular_full',
    'second_derivative_check',
    'standardize',
    'supermodularity_value',
    'gp_vertices',
    'in_polytope',
    'permutohedron_from_point',
]
