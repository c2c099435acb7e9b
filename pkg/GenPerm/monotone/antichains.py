"""
Funciones no decrecientes y funciones "up" de anticadenas

Una función no decreciente es irreducible sii es equivalente (módulo
constantes) a c·u_A para una anticadena no vacía A y c > 0. Las anticadenas
de [n] se corresponden con las funciones booleanas monótonas de n variables
(la tabla de verdad de u_A), que es como se cuentan.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Optional, Tuple

from GenPerm.config import ANTICHAIN_COUNT_MAX_N, ANTICHAIN_ENUMERATION_MAX_N
from GenPerm.core.checks import discrete_derivative, is_constant
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import canonical_key, check_ground_set, format_set, full_mask
from GenPerm.errors import ElementOutOfRange, EmptyAntichain, NotAntichain, NotNondecreasing

logger = logging.getLogger('GenPerm')


@dataclass(frozen=True)
class Antichain:
    """
    Familia de subconjuntos de [n] sin contenciones entre sí.

    Attributes:
        n (int): Tamaño del conjunto base
        sets (Tuple[int, ...]): Máscaras sin repetir, en orden canónico
    """
    n: int
    sets: Tuple[int, ...]

    def __post_init__(self):
        check_ground_set(self.n)
        unique = sorted(set(self.sets), key=canonical_key)
        for mask in unique:
            if mask < 0 or mask > full_mask(self.n):
                raise ElementOutOfRange(f"máscara {mask} fuera de [{self.n}]")
        for a in unique:
            for b in unique:
                if a != b and a & b == a:
                    raise NotAntichain(f"{format_set(a)} está contenido en {format_set(b)}")
        object.__setattr__(self, 'sets', tuple(unique))

    def is_empty(self) -> bool:
        return not self.sets

    def key(self) -> Tuple:
        return (len(self.sets), tuple(canonical_key(m) for m in self.sets))

    def __str__(self) -> str:
        return "{" + ", ".join(format_set(m) for m in self.sets) + "}"


def is_nondecreasing(f: SetFunction) -> bool:
    """f(I ∪ {i}) >= f(I) para todo I y todo i ∉ I (alcanza por transitividad)."""
    for mask in range(1 << f.n):
        for i in range(f.n):
            if not mask >> i & 1 and f(mask | 1 << i) < f(mask):
                return False
    return True


def require_nondecreasing(f: SetFunction) -> None:
    if not is_nondecreasing(f):
        raise NotNondecreasing("la función no es no decreciente")


def up_function(A: Antichain) -> SetFunction:
    """
    u_A(I) = 1 si I contiene algún J de A, 0 si no.

    Raises:
        EmptyAntichain: si A no tiene conjuntos
    """
    if A.is_empty():
        raise EmptyAntichain("la función up requiere una anticadena no vacía")
    return SetFunction.from_callable(A.n, lambda I: 1 if any(J & I == J for J in A.sets) else 0)


def minimal_sets(masks) -> Tuple[int, ...]:
    """Los elementos minimales (por inclusión) de una familia."""
    family = set(masks)
    return tuple(m for m in family if not any(o != m and o & m == o for o in family))


def _raised_family(f: SetFunction) -> List[int]:
    base = f(0)
    return [m for m in range(1 << f.n) if f(m) > base]


def is_irreducible_nondecreasing(f: SetFunction) -> Optional[Tuple[Fraction, Antichain]]:
    """
    (c, A) si f = f(∅) + c·u_A con c = f([n]) - f(∅) > 0; None si f es reducible o constante.

    A son los conjuntos minimales de F = {I : f(I) > f(∅)}.

    Raises:
        NotNondecreasing: si f no es no decreciente
    """
    require_nondecreasing(f)
    family = _raised_family(f)
    if not family:
        return None
    A = Antichain(f.n, minimal_sets(family))
    base = f(0)
    c = f(full_mask(f.n)) - base
    u = up_function(A)
    if all(f(m) == base + c * u(m) for m in range(1 << f.n)):
        return c, A
    return None


def reducibility_witness(f: SetFunction) -> Optional[Tuple[Fraction, Antichain]]:
    """
    (c, A) con c > 0 y f - c·u_A no decreciente, para f reducible no constante.

    c = min_{I ∈ F} (f(I) - f(∅)); None si f es irreducible o constante.

    Raises:
        NotNondecreasing: si f no es no decreciente
    """
    if is_irreducible_nondecreasing(f) is not None or is_constant(f):
        return None
    family = _raised_family(f)
    A = Antichain(f.n, minimal_sets(family))
    c = min(f(m) for m in family) - f(0)
    return c, A


def derivatives_nondecreasing(f: SetFunction) -> bool:
    """∂_i f es no decreciente para todo i (cierto si f es supermodular)."""
    return all(is_nondecreasing(discrete_derivative(f, i)) for i in range(1, f.n + 1))


@lru_cache(maxsize=None)
def monotone_functions(k: int) -> Tuple[int, ...]:
    """
    Tablas de verdad (enteros de 2^k bits) de las funciones booleanas monótonas de k variables.

    El bit x de la tabla es el valor en el subconjunto de máscara x; la
    variable k separa la mitad baja (f0) de la alta (f1), con f0 <= f1.
    """
    if k == 0:
        return (0, 1)
    previous = monotone_functions(k - 1)
    shift = 1 << (k - 1)
    return tuple(sorted(f0 | (f1 << shift) for f0 in previous for f1 in previous if f0 & ~f1 == 0))


def count_antichains(n: int) -> Tuple[int, int]:
    """
    Cantidad de anticadenas de [n]: (todas, no vacías).

    Se parte por las dos últimas variables: con a = f00 y b = f11, f01 y f10
    recorren independientemente el intervalo [a, b] de funciones monótonas
    de n-2 variables. Valores: 2, 3, 6, 20, 168, 7581, 7828354.

    Raises:
        GroundSetOutOfRange: si n está fuera de 0..6
    """
    check_ground_set(n, maximum=ANTICHAIN_COUNT_MAX_N)
    if n < 2:
        total = len(monotone_functions(n))
    else:
        funcs = monotone_functions(n - 2)
        above = {a: [c for c in funcs if a & ~c == 0] for a in funcs}
        total = 0
        for a in funcs:
            for b in above[a]:
                eta = sum(1 for c in above[a] if c & ~b == 0)
                total += eta * eta
    logger.debug(f"[ANTICHAIN] n={n}: {total} anticadenas")
    return total, total - 1


def antichain_lower_bound(n: int) -> int:
    """2^C(n, n/2): cada subfamilia de la capa del medio es una anticadena."""
    return 2 ** comb(n, n // 2)


def enumerate_antichains(n: int) -> List[Antichain]:
    """
    Todas las anticadenas de [n] (incluidas la vacía y {∅}), ordenadas por `Antichain.key`.

    Raises:
        GroundSetOutOfRange: si n está fuera de 0..4
    """
    check_ground_set(n, maximum=ANTICHAIN_ENUMERATION_MAX_N)
    result = []
    for table in monotone_functions(n):
        true_points = [m for m in range(1 << n) if table >> m & 1]
        result.append(Antichain(n, minimal_sets(true_points)))
    return sorted(result, key=Antichain.key)
