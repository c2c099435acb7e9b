"""
GenPerm.selftest

Batería de invariantes embebida (`genperm self-test`): cantidades conocidas
para n <= 4, ida y vuelta entre representaciones e identidades exactas.
Cada chequeo se aísla: una excepción cuenta como falla con su mensaje.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Tuple

from GenPerm.balanced import (
    SubsetMultiset, complexity_of_balanced, enumerate_irreducible_balanced,
    is_irreducible_balanced, is_z_irreducible, max_zero_one_determinant,
    row_operation_check, verify_complexity_bound,
)
from GenPerm.balanced.experiments import LinearCongruential
from GenPerm.cone import (
    brute_force_irreducible_supermodular, enumerate_irreducible_supermodular,
    supermodular_count_bounds,
)
from GenPerm.core import SetFunction, close_pairs, equivalent, mask_from_elements
from GenPerm.matroid import enumerate_loopless_matroids, matroid_to_supermodular, supermodular_to_matroid
from GenPerm.monotone import count_antichains
from GenPerm.transform import (
    apply_t, expected_condition_rank, expected_image_dimension, image_condition_rank,
    image_dimension, reconstruct, satisfies_path_sum_condition,
)
from GenPerm.twolayer import alpha, enumerate_two_layer, two_layer_oracle, verify_two_layer_identity

logger = logging.getLogger('GenPerm')


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _lift(n: int, k: int) -> SetFunction:
    """max(0, |I \\ {k}| - 1)."""
    others = ((1 << n) - 1) & ~(1 << (k - 1))
    return SetFunction.from_callable(n, lambda I: max(0, bin(I & others).count("1") - 1))


def _multiset(N: int, rows) -> SubsetMultiset:
    return SubsetMultiset.from_sets(N, [mask_from_elements(r, N) for r in rows])


def _check_close_pairs() -> bool:
    return [len(close_pairs(n)) for n in (2, 3, 4, 5)] == [1, 6, 24, 80]


def _check_rays_3() -> bool:
    rays = enumerate_irreducible_supermodular(3)
    expected = {alpha(3, 1), alpha(3, 2)} | {_lift(3, k) for k in (1, 2, 3)}
    return len(rays) == 5 and set(rays) == expected


def _check_rays_brute_3() -> bool:
    return enumerate_irreducible_supermodular(3) == brute_force_irreducible_supermodular(3)


def _check_rays_4() -> bool:
    rays = enumerate_irreducible_supermodular(4)
    return len(rays) == 37 and supermodular_count_bounds(4).admits(len(rays))


def _check_rays_5() -> bool:
    return len(enumerate_irreducible_supermodular(5, progress=True)) == 117978


def _check_image() -> bool:
    return all(
        image_dimension(n) == expected_image_dimension(n)
        and image_condition_rank(n) == expected_condition_rank(n)
        for n in (3, 4)
    )


def _check_roundtrip() -> bool:
    f = alpha(4, 1) + alpha(4, 2).scale(3) + _lift(4, 2)
    s = apply_t(f)
    return equivalent(reconstruct(s), f) and satisfies_path_sum_condition(s)


def _check_balanced_example() -> bool:
    M = _multiset(4, [[1], [1], [2, 3], [2, 4], [3, 4]])
    v = M.to_vector()
    return complexity_of_balanced(v) == 2 and is_z_irreducible(M) and bool(is_irreducible_balanced(v))


def _check_balanced_n5_example() -> bool:
    M = _multiset(5, [[1, 2, 3, 4], [4], [1, 2], [1, 3, 5], [2, 3, 5], [4, 5]])
    return is_z_irreducible(M) and not is_irreducible_balanced(M.to_vector())


def _check_balanced_dual() -> bool:
    for N in (1, 2, 3):
        vectors = enumerate_irreducible_balanced(N, method='both')
        if not verify_complexity_bound(N, vectors):
            return False
    return len(enumerate_irreducible_balanced(2)) == 2


def _check_max_determinant() -> bool:
    return [max_zero_one_determinant(N) for N in (1, 2, 3, 4)] == [1, 1, 2, 3]


def _check_row_operations() -> bool:
    rng = LinearCongruential(7)
    for N in (2, 3, 4, 5, 6):
        for _ in range(50):
            A = rng.zero_one_matrix(N)
            if not row_operation_check(A, 1 + rng.below(N), rng.below(1 << N)):
                return False
    return True


def _check_antichains() -> bool:
    return [count_antichains(n)[0] for n in range(6)] == [2, 3, 6, 20, 168, 7581]


def _check_matroids() -> bool:
    if [len(enumerate_loopless_matroids(n)) for n in (1, 2, 3)] != [1, 2, 6]:
        return False
    return all(
        supermodular_to_matroid(matroid_to_supermodular(M)) == M
        for n in (1, 2, 3, 4) for M in enumerate_loopless_matroids(n)
    )


def _check_two_layer() -> bool:
    if not all(verify_two_layer_identity(n, t) for n in range(3, 7) for t in range(1, n - 1)):
        return False
    return len(enumerate_two_layer(4, 1)) == 10 and len(enumerate_two_layer(5, 2)) == 12


def _check_two_layer_oracle() -> bool:
    rays = enumerate_irreducible_supermodular(4)
    return all(two_layer_oracle(4, t, rays) for t in (1, 2))


CHECKS: List[Tuple[str, Callable[[], bool], bool]] = [
    ("pares cercanos n=2..5", _check_close_pairs, False),
    ("rayos n=3: 5 funciones", _check_rays_3, False),
    ("rayos n=3: doble descripción = fuerza bruta", _check_rays_brute_3, False),
    ("rayos n=4: 37 funciones", _check_rays_4, False),
    ("imagen de T: dimensión y rango de condiciones", _check_image, False),
    ("reconstrucción y sumas de camino", _check_roundtrip, False),
    ("balanceado: ejemplo N=4", _check_balanced_example, False),
    ("balanceado: Z-irreducible no irreducible N=5", _check_balanced_n5_example, False),
    ("balanceado: métodos duales N<=3", _check_balanced_dual, False),
    ("determinante 0/1 máximo N<=4", _check_max_determinant, False),
    ("operaciones de fila", _check_row_operations, False),
    ("anticadenas n<=5", _check_antichains, False),
    ("matroides sin loops e ida y vuelta n<=4", _check_matroids, False),
    ("dos capas: identidad y |K|", _check_two_layer, False),
    ("dos capas: oráculo n=4", _check_two_layer_oracle, False),
    ("rayos n=5: 117978 funciones", _check_rays_5, True),
]


def run_self_test(include_big: bool = False) -> List[CheckResult]:
    """
    Corre la batería y devuelve un resultado por chequeo.

    Args:
        include_big: Incluye los chequeos de n = 5 (varios minutos)
    """
    results = []
    for name, check, big in CHECKS:
        if big and not include_big:
            continue
        start = time.perf_counter()
        try:
            passed, detail = bool(check()), ""
        except Exception as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - start
        logger.debug(f"[SELFTEST] {name}: {'ok' if passed else 'FALLA'} ({elapsed:.2f}s)")
        results.append(CheckResult(name, passed, detail, elapsed))
    return results
