"""
GenPerm TwoLayer Module

Clasificación de las funciones irreducibles con supermodularidades en dos capas.
"""

from GenPerm.twolayer.families import (
    TwoLayerSpec, admissible, alpha, beta, enumerate_two_layer, from_subset, gamma,
    layer_support, separating_pair, single_layer_members, span_dimension, two_layer_oracle,
    verify_pairwise_separation, verify_single_layer, verify_two_layer_identity,
)

__all__ = [
    'TwoLayerSpec',
    'admissible',
    'alpha',
    'beta',
    'enumerate_two_layer',
    'from_subset',
    'gamma',
    'layer_support',
    'separating_pair',
    'single_layer_members',
    'span_dimension',
    'two_layer_oracle',
    'verify_pairwise_separation',
    'verify_single_layer',
    'verify_two_layer_identity',
]
