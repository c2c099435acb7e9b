"""
Cono supermodular e irreducibles

Las funciones estándar (f = 0 en |I| <= 1) viven en las 2^n - n - 1
coordenadas f(I), |I| >= 2. El cono supermodular es {s_{I,J}(f) >= 0} en esas
coordenadas y sus rayos extremos son exactamente las funciones
supermodulares irreducibles.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from GenPerm.algebra import rank
from GenPerm.cone.cone import ConeH
from GenPerm.cone.double_description import DoubleDescription, brute_force_rays
from GenPerm.config import RAY_ENUMERATION_MAX_N
from GenPerm.core.checks import equivalent, is_modular, require_supermodular
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import ClosePair, canonical_subsets, check_ground_set, close_pairs
from GenPerm.errors import Infeasible, InvariantViolation, MismatchedGroundSet, ModularInput
from GenPerm.transform import apply_t, complexity_of
from GenPerm.utils import popcount

logger = logging.getLogger('GenPerm')


def standard_coordinates(n: int) -> List[int]:
    """Máscaras con |I| >= 2 en orden canónico (coordenadas del cono)."""
    return [m for m in canonical_subsets(n) if popcount(m) >= 2]


def supermodular_cone(n: int) -> ConeH:
    """
    Cono de funciones estándar supermodulares: una desigualdad por par cercano.

    Raises:
        GroundSetOutOfRange: si n < 2 o n > 16
    """
    pairs = close_pairs(n)
    coords = standard_coordinates(n)
    position = {m: i for i, m in enumerate(coords)}
    rows = []
    for pair in pairs:
        row = [0] * len(coords)
        for mask, sign in ((pair.meet, 1), (pair.join, 1), (pair.left, -1), (pair.right, -1)):
            if mask in position:
                row[position[mask]] += sign
        rows.append(tuple(row))
    return ConeH(len(coords), tuple(rows))


def function_from_coordinates(n: int, direction: Sequence[int]) -> SetFunction:
    """SetFunction estándar con los valores dados en las coordenadas |I| >= 2."""
    values = [0] * (1 << n)
    for mask, value in zip(standard_coordinates(n), direction):
        values[mask] = value
    return SetFunction(n, tuple(values))


def _check_enumeration_range(n: int) -> None:
    check_ground_set(n, minimum=2, maximum=RAY_ENUMERATION_MAX_N)


def enumerate_irreducible_supermodular(n: int, threads: int = 1, progress: bool = False,
                                       order: str = 'min-pairs') -> List[SetFunction]:
    """
    Representantes estándar de todas las funciones supermodulares irreducibles.

    Cantidades esperadas: 5 (n=3), 37 (n=4), 117978 (n=5).
    """
    _check_enumeration_range(n)
    engine = DoubleDescription(supermodular_cone(n), threads=threads, order=order, progress=progress)
    rays = engine.run()
    functions = sorted((function_from_coordinates(n, r.direction) for r in rays), key=SetFunction.key)
    logger.info(f"[ENUM] n={n}: {len(functions)} funciones irreducibles ({engine.steps} pasos)")
    return functions


def brute_force_irreducible_supermodular(n: int) -> List[SetFunction]:
    """Oráculo exhaustivo sobre conjuntos de 2^n - n - 2 pares ajustados (solo n chicos)."""
    _check_enumeration_range(n)
    rays = brute_force_rays(supermodular_cone(n))
    return sorted((function_from_coordinates(n, r.direction) for r in rays), key=SetFunction.key)


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """
    Certificado de (ir)reducibilidad de una función supermodular.

    Attributes:
        irreducible (bool): Resultado
        tight_pairs (Tuple[ClosePair, ...]): Pares con s = 0
        rank (int): Rango de sus condiciones en coordenadas estándar
        required (int): 2^n - n - 2
    """
    irreducible: bool
    tight_pairs: Tuple[ClosePair, ...]
    rank: int
    required: int

    def __bool__(self) -> bool:
        return self.irreducible


def is_irreducible_supermodular(f: SetFunction) -> IrreducibilityCertificate:
    """
    f es irreducible sii sus pares ajustados tienen rango 2^n - n - 2.

    Raises:
        NotSupermodular: si f no es supermodular
        ModularInput: si f es modular
    """
    require_supermodular(f)
    if is_modular(f):
        raise ModularInput("una función modular no es irreducible ni reducible")
    s = apply_t(f)
    cone = supermodular_cone(f.n)
    tight = s.tight_indices()
    tight_rank = rank([cone.inequalities[i] for i in tight]) if tight else 0
    required = (1 << f.n) - f.n - 2
    pairs = close_pairs(f.n)
    return IrreducibilityCertificate(
        irreducible=tight_rank == required,
        tight_pairs=tuple(pairs[i] for i in tight),
        rank=tight_rank,
        required=required,
    )


def conic_decompose(f: SetFunction, rays: Sequence[SetFunction]) -> List[Tuple[Fraction, int]]:
    """
    Coeficientes λ >= 0 con Σ λ_i·rays[i] equivalente a f.

    Descenso por caras: en cada paso se elige, entre los rayos de la cara
    minimal del residuo, el de más pares ajustados (empate: orden de la
    lista) y se resta el máximo múltiplo que mantiene el residuo en el cono.
    Cada paso agrega un par ajustado, así que hay a lo sumo 2^n - n - 1 términos.

    Raises:
        NotSupermodular: si f no es supermodular
        Infeasible: si la lista de rayos no alcanza (lista incompleta)
    """
    require_supermodular(f)
    for ray in rays:
        if ray.n != f.n:
            raise MismatchedGroundSet(f"rayo con n={ray.n} para una función con n={f.n}")
    ray_vectors = [apply_t(r).entries for r in rays]
    ray_tight = [sum(1 for v in vec if v == 0) for vec in ray_vectors]
    residual = list(apply_t(f).entries)
    coefficients = {}
    while any(v != 0 for v in residual):
        zero = [k for k, v in enumerate(residual) if v == 0]
        candidates = [i for i, vec in enumerate(ray_vectors)
                      if any(vec) and all(vec[k] == 0 for k in zero)]
        if not candidates:
            raise Infeasible("no hay rayo en la cara minimal del residuo: la lista de rayos está incompleta")
        best = max(candidates, key=lambda i: (ray_tight[i], -i))
        vec = ray_vectors[best]
        step = min(residual[k] / vec[k] for k in range(len(vec)) if vec[k] > 0)
        residual = [r - step * v for r, v in zip(residual, vec)]
        if any(r < 0 for r in residual):
            raise InvariantViolation("el residuo salió del cono durante la descomposición")
        coefficients[best] = coefficients.get(best, Fraction(0)) + step
    terms = sorted(coefficients.items())
    total = SetFunction.zeros(f.n)
    for index, coefficient in terms:
        total = total + rays[index].scale(coefficient)
    if not equivalent(total, f):
        raise InvariantViolation("la suma de la descomposición no es equivalente a la entrada")
    limit = (1 << f.n) - f.n - 1
    if len(terms) > limit:
        raise InvariantViolation(f"{len(terms)} términos superan la cota de Carathéodory {limit}")
    return [(coefficient, index) for index, coefficient in terms]


def max_enumerated_complexity(n: int, rays: Optional[Sequence[SetFunction]] = None) -> int:
    """Máxima complejidad entre los irreducibles de n (enumera si no se pasan)."""
    if rays is None:
        rays = enumerate_irreducible_supermodular(n)
    value = max(complexity_of(f) for f in rays)
    if value > 2 ** (n * n * (1 << n)):
        raise InvariantViolation(f"complejidad {value} supera 2^(n^2 2^n)")
    return value


@dataclass(frozen=True)
class CountBounds:
    """Cotas superiores para la cantidad de irreducibles con n elementos."""
    n: int
    tight_choice: int     # C(|P_n|, 2^n - n - 2)
    coarse: int           # C(n^2 2^n, 2^n)

    def admits(self, count: int) -> bool:
        return count <= self.tight_choice <= self.coarse


def supermodular_count_bounds(n: int) -> CountBounds:
    check_ground_set(n, minimum=2)
    return CountBounds(
        n=n,
        tight_choice=comb(len(close_pairs(n)), (1 << n) - n - 2),
        coarse=comb(n * n * (1 << n), 1 << n),
    )


@dataclass(frozen=True)
class ComplexityBound:
    """
    Cota de Hadamard para la complejidad: H = 2^e · n · 2^(n/2),
    e = |P_n| - (2^n - n - 2). Se compara al cuadrado para quedar en enteros.
    """
    n: int
    exponent: int

    def admits(self, complexity: int) -> bool:
        # m <= 2^e n 2^(n/2)  <=>  m^2 <= 4^e n^2 2^n
        return complexity * complexity <= 4 ** self.exponent * self.n * self.n * (1 << self.n)

    def admits_coarse(self, complexity: int) -> bool:
        return complexity <= 2 ** (self.n * self.n * (1 << self.n))


def complexity_bound(n: int) -> ComplexityBound:
    check_ground_set(n, minimum=2)
    return ComplexityBound(n, len(close_pairs(n)) - ((1 << n) - n - 2))
