"""
Enumeración por fuerza bruta de matroides sin loops (etiquetados)

Para cada rango r se recorren las familias de r-partes que cubren [n] y se
filtran por el axioma de intercambio. Cantidades: 1, 2, 6 para n = 1, 2, 3.
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from GenPerm.config import MATROID_ENUMERATION_MAX_N
from GenPerm.core.subsets import check_ground_set, full_mask, subsets_of_size
from GenPerm.matroid.matroid import Matroid, check_exchange

logger = logging.getLogger('GenPerm')


@lru_cache(maxsize=None)
def _rank_families(n: int, r: int) -> Tuple[Tuple[int, ...], ...]:
    layer = subsets_of_size(n, r)
    full = full_mask(n)
    families = []
    for choice in range(1, 1 << len(layer)):
        family = [layer[i] for i in range(len(layer)) if choice >> i & 1]
        union = 0
        for b in family:
            union |= b
        if union == full and check_exchange(family):
            families.append(tuple(family))
    return tuple(families)


def enumerate_loopless_matroids(n: int) -> List[Matroid]:
    """
    Todos los matroides sin loops sobre [n], ordenados por `Matroid.key`.

    Raises:
        GroundSetOutOfRange: si n está fuera de 0..5
    """
    check_ground_set(n, maximum=MATROID_ENUMERATION_MAX_N)
    matroids = [Matroid(n, family) for r in range(n + 1) for family in _rank_families(n, r)]
    matroids.sort(key=Matroid.key)
    logger.info(f"[ENUM] n={n}: {len(matroids)} matroides sin loops")
    return matroids
