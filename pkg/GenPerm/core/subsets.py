"""
Subconjuntos de [n] como máscaras de bits

El elemento i (1-based) corresponde al bit i-1. El orden canónico de
subconjuntos es (cardinalidad, valor numérico) ascendente y se usa en toda
serialización para que las salidas sean reproducibles.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from GenPerm.config import MAX_GROUND_SET, MIN_CLOSE_PAIR_N
from GenPerm.errors import ElementOutOfRange, GroundSetOutOfRange
from GenPerm.utils import popcount


def check_ground_set(n: int, minimum: int = 0, maximum: int = MAX_GROUND_SET) -> None:
    """Valida el tamaño del conjunto base; GroundSetOutOfRange si no cumple."""
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum or n > maximum:
        raise GroundSetOutOfRange(
            f"tamaño de conjunto base fuera de rango: n={n!r} (permitido {minimum}..{maximum})"
        )


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bit(element: int) -> int:
    return 1 << (element - 1)


def mask_from_elements(elements: Iterable[int], n: int) -> int:
    """Construye la máscara de una lista de elementos 1-based."""
    mask = 0
    for e in elements:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1 or e > n:
            raise ElementOutOfRange(f"elemento {e!r} fuera de [1, {n}]")
        mask |= bit(e)
    return mask


def elements_of(mask: int) -> List[int]:
    """Lista ordenada (1-based) de los elementos de la máscara."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def canonical_key(mask: int) -> Tuple[int, int]:
    return (popcount(mask), mask)


@lru_cache(maxsize=None)
def canonical_subsets(n: int) -> Tuple[int, ...]:
    """Todas las máscaras de [n] en orden canónico."""
    return tuple(sorted(range(1 << n), key=canonical_key))


@lru_cache(maxsize=None)
def subsets_of_size(n: int, k: int) -> Tuple[int, ...]:
    return tuple(m for m in canonical_subsets(n) if popcount(m) == k)


def submasks(mask: int) -> Iterable[int]:
    """Todas las submáscaras de `mask` (incluye 0 y mask), en orden decreciente."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def format_set(mask: int) -> str:
    """Notación compacta para logs: {1,3}."""
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"


@dataclass(frozen=True)
class ClosePair:
    """
    Par cercano {I, J} con I = meet ∪ {a}, J = meet ∪ {b}, a < b.

    Corresponde a una cara cuadrada del hipercubo booleano. La capa del par
    es |I| = |meet| + 1.

    Attributes:
        meet (int): Máscara de I ∩ J
        a (int): Menor de los dos elementos intercambiados (1-based)
        b (int): Mayor de los dos elementos intercambiados (1-based)
    """
    meet: int
    a: int
    b: int

    @property
    def left(self) -> int:
        return self.meet | bit(self.a)

    @property
    def right(self) -> int:
        return self.meet | bit(self.b)

    @property
    def join(self) -> int:
        return self.meet | bit(self.a) | bit(self.b)

    @property
    def layer(self) -> int:
        return popcount(self.meet) + 1

    def as_sets(self) -> Tuple[int, int]:
        return (self.left, self.right)

    def __str__(self) -> str:
        return f"({format_set(self.left)}, {format_set(self.right)})"


def make_close_pair(meet: int, x: int, y: int) -> ClosePair:
    """ClosePair normalizado (a < b) a partir de dos elementos en cualquier orden."""
    if x == y:
        raise ElementOutOfRange(f"un par cercano necesita dos elementos distintos: {x}")
    a, b = (x, y) if x < y else (y, x)
    return ClosePair(meet, a, b)


@lru_cache(maxsize=None)
def _close_pairs(n: int) -> Tuple[ClosePair, ...]:
    pairs = []
    for meet in canonical_subsets(n):
        outside = [e for e in range(1, n + 1) if not meet & bit(e)]
        for a, b in combinations(outside, 2):
            pairs.append(ClosePair(meet, a, b))
    return tuple(pairs)


def close_pairs(n: int) -> Tuple[ClosePair, ...]:
    """
    Todos los pares cercanos de [n] en orden canónico (meet, luego (a, b)).

    Hay C(n,2)·2^(n-2) pares.

    Raises:
        GroundSetOutOfRange: si n < 2 o n > 16
    """
    check_ground_set(n, minimum=MIN_CLOSE_PAIR_N)
    return _close_pairs(n)


@lru_cache(maxsize=None)
def close_pair_index(n: int) -> Dict[ClosePair, int]:
    """Posición de cada par en `close_pairs(n)` (lookup O(1))."""
    return {pair: idx for idx, pair in enumerate(close_pairs(n))}


def pairs_in_layer(n: int, t: int) -> List[int]:
    """Índices de los pares cercanos de la capa t (|I| = |J| = t)."""
    return [idx for idx, pair in enumerate(close_pairs(n)) if pair.layer == t]


def sorted_masks(masks: Sequence[int]) -> List[int]:
    return sorted(masks, key=canonical_key)
