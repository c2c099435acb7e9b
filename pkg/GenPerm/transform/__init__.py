"""
GenPerm Transform Module

- SupermodularityVector / apply_t: el mapa T y su imagen
- reconstruct: inversa de T sobre la imagen (normalizada en |I| <= 1)
- PathChain / path_sum / color_weights: sumas de camino por color
"""

from GenPerm.transform.supermodularity import (
    ImageViolation, SupermodularityVector, apply_t, expected_condition_rank,
    expected_image_dimension, find_image_violation, image_condition_rank,
    image_dimension, in_image_by_solving, in_image_t, reconstruct,
    reconstruct_with_order, transform_matrix,
)
from GenPerm.transform.paths import (
    ColorWeights, PathChain, color_weights, complexity_of, path_chain,
    path_sum, path_sums_by_color, satisfies_path_sum_condition,
)

__all__ = [
    'ImageViolation',
    'SupermodularityVector',
    'apply_t',
    'expected_condition_rank',
    'expected_image_dimension',
    'find_image_violation',
    'image_condition_rank',
    'image_dimension',
    'in_image_by_solving',
    'in_image_t',
    'reconstruct',
    'reconstruct_with_order',
    'transform_matrix',
    'ColorWeights',
    'PathChain',
    'color_weights',
    'complexity_of',
    'path_chain',
    'path_sum',
    'path_sums_by_color',
    'satisfies_path_sum_condition',
]
