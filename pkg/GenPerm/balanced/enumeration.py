"""
Enumeración de vectores balanceados irreducibles

Dos caminos independientes que deben coincidir:

- cone: rayos extremos de {v >= 0, B_N v ∈ R·1} con el motor de doble descripción
- support: soportes de a lo sumo N conjuntos con indicadores independientes,
  resueltos por la regla de Cramer (`complexity_from_support`)
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

from GenPerm.algebra import int_determinant, rank
from GenPerm.balanced.experiments import max_zero_one_determinant
from GenPerm.balanced.vectors import (
    BalancedVector, complexity_of_balanced, indicator, is_irreducible_balanced, nonempty_subsets,
)
from GenPerm.cone import ConeH, extreme_rays
from GenPerm.config import BALANCED_ENUMERATION_MAX_N
from GenPerm.core.subsets import bit, check_ground_set, format_set
from GenPerm.errors import InvariantViolation, SingularSystem
from GenPerm.utils import gcd_all

logger = logging.getLogger('GenPerm')

METHODS = ('both', 'cone', 'support')


@dataclass(frozen=True)
class SupportSolution:
    """
    Solución primitiva de A x = m·1 sobre un soporte.

    Attributes:
        m (int): Complejidad
        x (Tuple[int, ...]): Multiplicidades, en el orden del soporte dado
        determinant (int): |det A| de la matriz completada
        gcd_factor (int): mcd(det A_1, ..., det A); m = |det A| / gcd_factor
    """
    m: int
    x: Tuple[int, ...]
    determinant: int
    gcd_factor: int


def _complete_with_singletons(sets: Sequence[int], N: int) -> List[int]:
    columns = list(sets)
    for element in range(1, N + 1):
        if len(columns) == N:
            break
        candidate = bit(element)
        if rank([indicator(c, N) for c in columns + [candidate]]) > len(columns):
            columns.append(candidate)
    return columns


def complexity_from_support(sets: Sequence[int], N: int) -> Optional[SupportSolution]:
    """
    Complejidad y multiplicidades del vector balanceado con soporte `sets`.

    Completa el soporte con singletons {1}, {2}, ... (el primero que sube el
    rango) hasta una matriz A de N x N invertible y aplica Cramer:
    x_i = m det(A_i) / det(A). Las columnas de la completación deben quedar en 0.

    Args:
        sets: Máscaras del soporte (a lo sumo N)
        N: Tamaño del conjunto base

    Returns:
        SupportSolution, o None si la solución no es positiva en todo el soporte

    Raises:
        SingularSystem: si los indicadores del soporte son dependientes
    """
    check_ground_set(N, minimum=1)
    sets = list(sets)
    if not sets or len(sets) > N or rank([indicator(s, N) for s in sets]) < len(sets):
        raise SingularSystem(
            f"el soporte {[format_set(s) for s in sets]} no tiene indicadores independientes en [{N}]"
        )
    columns = _complete_with_singletons(sets, N)
    # filas = elementos, columnas = conjuntos
    A = [[1 if c >> r & 1 else 0 for c in columns] for r in range(N)]
    det_a = int_determinant(A)
    cramer = []
    for i in range(N):
        A_i = [row[:i] + [1] + row[i + 1:] for row in A]
        cramer.append(int_determinant(A_i))
    if any(cramer[len(sets):]):
        return None
    g = gcd_all(cramer + [det_a])
    sign = 1 if det_a > 0 else -1
    x = tuple(sign * d // g for d in cramer[:len(sets)])
    if any(v <= 0 for v in x):
        return None
    return SupportSolution(m=abs(det_a) // g, x=x, determinant=abs(det_a), gcd_factor=g)


def balanced_cone(N: int) -> ConeH:
    """{v >= 0 : (B_N v)_1 = ... = (B_N v)_N} en las coordenadas de `nonempty_subsets(N)`."""
    coords = nonempty_subsets(N)
    dim = len(coords)
    identity = tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
    equalities = []
    for i in range(N - 1):
        equalities.append(tuple((m >> i & 1) - (m >> (i + 1) & 1) for m in coords))
    return ConeH(dim, identity, tuple(equalities))


def _by_cone(N: int, threads: int) -> List[BalancedVector]:
    rays = extreme_rays(balanced_cone(N), threads=threads)
    return [BalancedVector.from_dense(N, r.direction) for r in rays]


def _by_support(N: int) -> List[BalancedVector]:
    found = []
    for size in range(1, N + 1):
        for sets in combinations(nonempty_subsets(N), size):
            if rank([indicator(s, N) for s in sets]) < size:
                continue
            solution = complexity_from_support(sets, N)
            if solution is not None:
                found.append(BalancedVector(N, tuple(zip(sets, solution.x))))
    return found


def enumerate_irreducible_balanced(N: int, method: str = 'both', threads: int = 1) -> List[BalancedVector]:
    """
    Todos los vectores balanceados irreducibles (forma entera primitiva), en orden canónico.

    Args:
        N: Tamaño del conjunto base (1..4)
        method: 'both' (ambos caminos, deben coincidir), 'cone' o 'support'
        threads: Workers del motor de conos

    Raises:
        GroundSetOutOfRange: si N está fuera de 1..4
        InvariantViolation: si los dos caminos no coinciden
    """
    check_ground_set(N, minimum=1, maximum=BALANCED_ENUMERATION_MAX_N)
    if method not in METHODS:
        raise ValueError(f"método desconocido: {method!r} (opciones: {', '.join(METHODS)})")
    results = {}
    if method in ('both', 'cone'):
        results['cone'] = sorted(_by_cone(N, threads), key=BalancedVector.key)
    if method in ('both', 'support'):
        results['support'] = sorted(_by_support(N), key=BalancedVector.key)
    if method == 'both' and results['cone'] != results['support']:
        raise InvariantViolation(
            f"[ENUM] N={N}: cono da {len(results['cone'])} vectores y soportes {len(results['support'])}"
        )
    vectors = results['cone'] if 'cone' in results else results['support']
    for v in vectors:
        if len(v.support) > N or not is_irreducible_balanced(v):
            raise InvariantViolation(f"[ENUM] vector enumerado no irreducible: {v}")
    logger.info(f"[ENUM] N={N}: {len(vectors)} vectores balanceados irreducibles ({method})")
    return vectors


def support_count_bound(N: int) -> int:
    """Σ_{k<=N} C(2^N - 1, k): cantidad de soportes posibles."""
    return sum(comb((1 << N) - 1, k) for k in range(1, N + 1))


def closed_form_bound_holds(N: int, m: int) -> bool:
    """m <= (N+1)^((N+1)/2) / 2^N, comparado al cuadrado."""
    return (m << N) ** 2 <= (N + 1) ** (N + 1)


@dataclass(frozen=True)
class BalancedBoundReport:
    """
    Resultado de `verify_complexity_bound`.

    Attributes:
        N (int): Tamaño del conjunto base
        max_complexity (int): Máximo m entre los irreducibles
        max_determinant (int): max det A sobre {0,1}^{N x N}
        holds (bool): m <= max det y m <= (N+1)^((N+1)/2) / 2^N
    """
    N: int
    max_complexity: int
    max_determinant: int
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def verify_complexity_bound(N: int, vectors: Optional[Sequence[BalancedVector]] = None) -> BalancedBoundReport:
    """Compara la complejidad máxima contra el determinante máximo y la cota cerrada."""
    check_ground_set(N, minimum=1, maximum=BALANCED_ENUMERATION_MAX_N)
    if vectors is None:
        vectors = enumerate_irreducible_balanced(N)
    top = max(complexity_of_balanced(v) for v in vectors)
    det_max = max_zero_one_determinant(N)
    holds = top <= det_max and closed_form_bound_holds(N, top)
    logger.debug(f"[BAL] N={N}: m máx {top}, det máx {det_max}, cota {'ok' if holds else 'FALLA'}")
    return BalancedBoundReport(N=N, max_complexity=top, max_determinant=det_max, holds=holds)
