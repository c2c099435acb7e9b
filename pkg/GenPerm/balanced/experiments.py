"""
Experimentos con determinantes de matrices 0/1

- LinearCongruential: generador de 64 bits documentado (reproducible bit a bit)
- row_operation_check: las operaciones de columna que llevan A y A_i a matrices +-1
- determinant_experiment: muestreo de |det A| para A uniforme en {0,1}^{N x N}
- determinant_distribution_check: comparación exhaustiva de distribuciones (N chicos)
- z_irreducible_search: búsqueda aleatoria de multiconjuntos Z-irreducibles
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from GenPerm.algebra import int_determinant
from GenPerm.balanced.vectors import SubsetMultiset, balance_of, find_balanced_submultiset
from GenPerm.config import (
    DEFAULT_SEED, DET_BRUTE_FORCE_MAX_N, DET_DISTRIBUTION_MAX_N, LCG_INCREMENT,
    LCG_MODULUS, LCG_MULTIPLIER,
)
from GenPerm.core.subsets import bit, check_ground_set
from GenPerm.errors import ParamOutOfRange

logger = logging.getLogger('GenPerm')

IntMatrix = List[List[int]]


class LinearCongruential:
    """
    x_{k+1} = (a x_k + c) mod 2^64 con las constantes de config.

    Los bits aleatorios salen del bit más alto del estado (los bajos de un
    LCG módulo potencia de 2 tienen período corto).
    """

    def __init__(self, seed: int = DEFAULT_SEED):
        self.state = seed % LCG_MODULUS

    def next(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) % LCG_MODULUS
        return self.state

    def bit(self) -> int:
        return self.next() >> 63

    def below(self, bound: int) -> int:
        """Entero en [0, bound) a partir de los 32 bits altos."""
        return (self.next() >> 32) % bound

    def zero_one_matrix(self, N: int) -> IntMatrix:
        return [[self.bit() for _ in range(N)] for _ in range(N)]


def _ones_column(A: IntMatrix, i: int) -> IntMatrix:
    """A con la columna i (0-based) reemplazada por unos."""
    return [row[:i] + [1] + row[i + 1:] for row in A]


def _bordered(A: IntMatrix) -> IntMatrix:
    """(N+1) x (N+1): primera columna de unos, resto de la primera fila en 0, A abajo a la derecha."""
    N = len(A)
    return [[1] + [0] * N] + [[1] + list(row) for row in A]


def row_operation_check(A: Sequence[Sequence[int]], i: int, signs: int = 0) -> bool:
    """
    Verifica las dos reducciones de columnas sobre una matriz 0/1.

    - A_i' (columna j != i reemplazada por col_i - 2 col_j) tiene entradas +-1
      y det A_i' = (-2)^(N-1) det A_i; negar filas de A_i' no cambia |det|.
    - A' (A con borde de unos) cumple det A' = det A; reemplazar columnas j > 1
      por col_1 - col_j deja una matriz 0/1 con primera columna de unos y el
      mismo |det|.

    Args:
        A: Matriz N x N con entradas 0/1
        i: Columna (1-based)
        signs: Bits que eligen qué filas negar en A_i'' y qué columnas
            reemplazar en A'' (bit r para la fila/columna r, 0-based)

    Raises:
        ParamOutOfRange: si A no es cuadrada 0/1 o i está fuera de 1..N
    """
    N = len(A)
    A = [list(row) for row in A]
    if N < 1 or any(len(row) != N for row in A) or any(v not in (0, 1) for row in A for v in row):
        raise ParamOutOfRange("se esperaba una matriz cuadrada con entradas 0/1")
    if not 1 <= i <= N:
        raise ParamOutOfRange(f"columna {i} fuera de 1..{N}")
    c = i - 1

    A_i = _ones_column(A, c)
    A_i1 = [[row[c] - 2 * row[j] if j != c else row[c] for j in range(N)] for row in A_i]
    det_a_i = int_determinant(A_i)
    det_a_i1 = int_determinant(A_i1)
    ok = all(v in (1, -1) for row in A_i1 for v in row)
    ok = ok and det_a_i1 == (-2) ** (N - 1) * det_a_i
    A_i2 = [[-v for v in row] if signs >> r & 1 else row for r, row in enumerate(A_i1)]
    ok = ok and abs(int_determinant(A_i2)) == abs(det_a_i1)

    border = _bordered(A)
    det_a = int_determinant(A)
    ok = ok and int_determinant(border) == det_a
    flipped = [
        [row[0] - v if j > 0 and signs >> j & 1 else v for j, v in enumerate(row)]
        for row in border
    ]
    ok = ok and all(v in (0, 1) for row in flipped for v in row) and all(row[0] == 1 for row in flipped)
    ok = ok and abs(int_determinant(flipped)) == abs(det_a)
    if not ok:
        logger.debug(f"[DET] falla de operaciones de fila: A={A}, i={i}, signs={signs}")
    return ok


@dataclass(frozen=True)
class DeterminantStats:
    """
    Registro de `determinant_experiment`.

    Attributes:
        N (int): Tamaño de las matrices
        trials (int): Muestras
        seed (int): Semilla del generador
        singular_count (int): Muestras con det = 0
        max_abs_det (int): Máximo |det|
        histogram (Tuple[Tuple[int, int], ...]): (|det|·2^N, frecuencia), ordenado
    """
    N: int
    trials: int
    seed: int
    singular_count: int
    max_abs_det: int
    histogram: Tuple[Tuple[int, int], ...]

    @property
    def singular_fraction(self) -> float:
        return self.singular_count / self.trials

    def csv_row(self) -> Dict[str, int]:
        return {
            'N': self.N,
            'trials': self.trials,
            'seed': self.seed,
            'singular_count': self.singular_count,
            'max_abs_det': self.max_abs_det,
        }


def determinant_experiment(N: int, trials: int, seed: int = DEFAULT_SEED) -> DeterminantStats:
    """
    Muestrea matrices 0/1 uniformes con el generador sembrado.

    Raises:
        GroundSetOutOfRange: si N está fuera de 1..16
        ParamOutOfRange: si trials < 1
    """
    check_ground_set(N, minimum=1)
    if trials < 1:
        raise ParamOutOfRange(f"trials debe ser >= 1 (recibido {trials})")
    rng = LinearCongruential(seed)
    histogram: Counter = Counter()
    singular = 0
    for _ in range(trials):
        det = abs(int_determinant(rng.zero_one_matrix(N)))
        if det == 0:
            singular += 1
        histogram[det << N] += 1
    stats = DeterminantStats(
        N=N,
        trials=trials,
        seed=seed,
        singular_count=singular,
        max_abs_det=max(histogram) >> N,
        histogram=tuple(sorted(histogram.items())),
    )
    logger.debug(f"[DET] N={N} trials={trials}: {singular} singulares, max |det| {stats.max_abs_det}")
    return stats


def _abs_det_counts(matrices) -> Counter:
    return Counter(abs(int_determinant(M)) for M in matrices)


def _all_matrices(rows: int, cols: int, values: Sequence[int]):
    for entries in product(values, repeat=rows * cols):
        yield [list(entries[r * cols:(r + 1) * cols]) for r in range(rows)]


def determinant_distribution_check(N: int) -> bool:
    """
    Comparación exhaustiva de distribuciones.

    |det A|·2^N sobre {0,1}^{N x N} se distribuye como |det M_{N+1}|, y
    |det A_1|·2^(N-1) como |det M_N|, con M uniforme en {+-1}.

    Raises:
        GroundSetOutOfRange: si N está fuera de 1..3
    """
    check_ground_set(N, minimum=1, maximum=DET_DISTRIBUTION_MAX_N)
    zero_one = _abs_det_counts(_all_matrices(N, N, (0, 1)))
    signs_big = _abs_det_counts(_all_matrices(N + 1, N + 1, (1, -1)))
    # 2^(N^2) matrices 0/1 contra 2^((N+1)^2) matrices +-1
    first = signs_big == Counter({d << N: c << (2 * N + 1) for d, c in zero_one.items()})

    ones_first = _abs_det_counts(
        [[1] + row for row in M] for M in _all_matrices(N, N - 1, (0, 1))
    )
    signs_small = _abs_det_counts(_all_matrices(N, N, (1, -1)))
    second = signs_small == Counter({d << (N - 1): c << N for d, c in ones_first.items()})
    logger.debug(f"[DET] N={N}: primera afirmación {first}, segunda {second}")
    return first and second


def max_zero_one_determinant(N: int) -> int:
    """max det A sobre {0,1}^{N x N} por fuerza bruta (1, 1, 2, 3 para N = 1..4)."""
    check_ground_set(N, minimum=1, maximum=DET_BRUTE_FORCE_MAX_N)
    return max(int_determinant(M) for M in _all_matrices(N, N, (0, 1)))


def z_bound_holds(N: int, m: int) -> bool:
    """m <= (N+1)^((N+1)/2), comparado al cuadrado."""
    return m * m <= (N + 1) ** (N + 1)


@dataclass(frozen=True)
class ZSearchResult:
    """
    Resultado de `z_irreducible_search`.

    Attributes:
        N (int): Tamaño del conjunto base
        trials (int): Intentos
        seed (int): Semilla
        found (Tuple[SubsetMultiset, ...]): Multiconjuntos Z-irreducibles distintos, ordenados
        max_complexity (int): Máximo m encontrado
        bound_holds (bool): Todos cumplen m <= (N+1)^((N+1)/2)
    """
    N: int
    trials: int
    seed: int
    found: Tuple[SubsetMultiset, ...]
    max_complexity: int
    bound_holds: bool


def _random_balanced(rng: LinearCongruential, N: int) -> SubsetMultiset:
    """Conjuntos aleatorios completados con singletons hasta balancear."""
    count = 1 + rng.below(N + 1)
    sets = [1 + rng.below((1 << N) - 1) for _ in range(count)]
    cover = [sum(1 for s in sets if s >> e & 1) for e in range(N)]
    top = max(cover)
    for e in range(N):
        sets.extend([bit(e + 1)] * (top - cover[e]))
    return SubsetMultiset.from_sets(N, sets)


def _descend(M: SubsetMultiset) -> SubsetMultiset:
    """Baja a sub-multiconjuntos balanceados propios hasta uno Z-irreducible."""
    while True:
        smaller: Optional[SubsetMultiset] = find_balanced_submultiset(M)
        if smaller is None:
            return M
        M = smaller


def z_irreducible_search(N: int, trials: int, seed: int = DEFAULT_SEED) -> ZSearchResult:
    """
    Búsqueda aleatoria sembrada de multiconjuntos Z-irreducibles.

    Raises:
        GroundSetOutOfRange: si N está fuera de 1..4
        ParamOutOfRange: si trials < 1
    """
    check_ground_set(N, minimum=1, maximum=DET_BRUTE_FORCE_MAX_N)
    if trials < 1:
        raise ParamOutOfRange(f"trials debe ser >= 1 (recibido {trials})")
    rng = LinearCongruential(seed)
    seen = {}
    for _ in range(trials):
        M = _descend(_random_balanced(rng, N))
        seen[M.counts] = M
    found = tuple(seen[key] for key in sorted(seen))
    complexities = [int(balance_of(M.to_vector())) for M in found]
    top = max(complexities)
    result = ZSearchResult(
        N=N,
        trials=trials,
        seed=seed,
        found=found,
        max_complexity=top,
        bound_holds=all(z_bound_holds(N, m) for m in complexities),
    )
    logger.debug(f"[BAL] N={N}: {len(found)} Z-irreducibles, m máx {top}")
    return result
