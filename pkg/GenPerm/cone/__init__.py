"""
GenPerm Cone Module

- ConeH / Ray: representación H y rayos extremos
- DoubleDescription: motor exacto de doble descripción
- supermodular: cono supermodular, irreducibles, descomposición cónica
"""

from GenPerm.cone.cone import ConeH, Ray
from GenPerm.cone.double_description import DoubleDescription, brute_force_rays, extreme_rays
from GenPerm.cone.supermodular import (
    ComplexityBound, CountBounds, IrreducibilityCertificate,
    brute_force_irreducible_supermodular, complexity_bound, conic_decompose,
    enumerate_irreducible_supermodular, function_from_coordinates,
    is_irreducible_supermodular, max_enumerated_complexity, standard_coordinates,
    supermodular_cone, supermodular_count_bounds,
)

__all__ = [
    'ConeH',
    'Ray',
    'DoubleDescription',
    'brute_force_rays',
    'extreme_rays',
    'ComplexityBound',
    'CountBounds',
    'IrreducibilityCertificate',
    'brute_force_irreducible_supermodular',
    'complexity_bound',
    'conic_decompose',
    'enumerate_irreducible_supermodular',
    'function_from_coordinates',
    'is_irreducible_supermodular',
    'max_enumerated_complexity',
    'standard_coordinates',
    'supermodular_cone',
    'supermodular_count_bounds',
]
