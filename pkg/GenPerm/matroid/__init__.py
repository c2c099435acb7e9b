"""
GenPerm Matroid Module

- Matroid: bases, rango, nulidad, loops/coloops, reducibilidad
- bijection: matroides sin loops <-> funciones supermodulares simples
- enumeration: matroides sin loops por fuerza bruta
"""

from GenPerm.matroid.matroid import (
    Matroid, check_exchange, delete_coloops, direct_sum, free, is_reducible_matroid,
    restrict_bases, uniform,
)
from GenPerm.matroid.bijection import (
    SimpleSplit, is_simple, matroid_to_supermodular, split_simple_function, supermodular_to_matroid,
)
from GenPerm.matroid.enumeration import enumerate_loopless_matroids

__all__ = [
    'Matroid',
    'check_exchange',
    'delete_coloops',
    'direct_sum',
    'free',
    'is_reducible_matroid',
    'restrict_bases',
    'uniform',
    'SimpleSplit',
    'is_simple',
    'matroid_to_supermodular',
    'split_simple_function',
    'supermodular_to_matroid',
    'enumerate_loopless_matroids',
]
