"""
BalancedVector / SubsetMultiset - Vectores y multiconjuntos balanceados

Un vector v >= 0 indexado por los subconjuntos no vacíos de [N] es balanceado
con complejidad m si cada elemento i queda cubierto exactamente m veces:
Σ_{I∋i} v_I = m. Un multiconjunto es un vector entero.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from GenPerm.algebra import rank
from GenPerm.core.subsets import bit, canonical_key, canonical_subsets, check_ground_set, format_set
from GenPerm.errors import ElementOutOfRange, NegativeEntry, Unbalanced, ZeroVector
from GenPerm.utils import Rational, primitive, to_fraction

logger = logging.getLogger('GenPerm')


def nonempty_subsets(N: int) -> Tuple[int, ...]:
    """Máscaras no vacías de [N] en orden canónico (coordenadas de B_N)."""
    return canonical_subsets(N)[1:]


def indicator(mask: int, N: int) -> List[int]:
    return [1 if mask & bit(i) else 0 for i in range(1, N + 1)]


@dataclass(frozen=True)
class BalancedVector:
    """
    Vector v >= 0 sobre subconjuntos no vacíos de [N].

    No se exige balance al construir: los vectores crudos pueden estar
    desbalanceados y `balance_of` lo informa.

    Attributes:
        N (int): Tamaño del conjunto base
        entries (Tuple[Tuple[int, Fraction], ...]): (máscara, valor) con valor > 0,
            ordenado canónicamente (soporte)
    """
    N: int
    entries: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self):
        check_ground_set(self.N, minimum=1)
        merged: Dict[int, Fraction] = {}
        for mask, value in self.entries:
            if mask <= 0 or mask >= 1 << self.N:
                raise ElementOutOfRange(f"máscara {mask} no es un subconjunto no vacío de [{self.N}]")
            q = to_fraction(value)
            if q < 0:
                raise NegativeEntry(f"entrada negativa en {format_set(mask)}: {q}")
            merged[mask] = merged.get(mask, Fraction(0)) + q
        entries = tuple(sorted(((m, q) for m, q in merged.items() if q != 0), key=lambda e: canonical_key(e[0])))
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_mapping(cls, N: int, mapping: Dict[int, Rational]) -> 'BalancedVector':
        return cls(N, tuple(mapping.items()))

    @classmethod
    def from_dense(cls, N: int, values: Iterable[Rational]) -> 'BalancedVector':
        """Desde un vector denso en el orden de `nonempty_subsets(N)`."""
        return cls(N, tuple(zip(nonempty_subsets(N), values)))

    def dense(self) -> Tuple[Fraction, ...]:
        lookup = dict(self.entries)
        return tuple(lookup.get(m, Fraction(0)) for m in nonempty_subsets(self.N))

    def value(self, mask: int) -> Fraction:
        return dict(self.entries).get(mask, Fraction(0))

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(m for m, _ in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def coverage(self) -> Tuple[Fraction, ...]:
        """Σ_{I∋i} v_I para cada elemento i (B_N v)."""
        totals = [Fraction(0)] * self.N
        for mask, value in self.entries:
            for i in range(self.N):
                if mask >> i & 1:
                    totals[i] += value
        return tuple(totals)

    def scale(self, c: Rational) -> 'BalancedVector':
        c = to_fraction(c)
        return BalancedVector(self.N, tuple((m, c * q) for m, q in self.entries))

    def key(self) -> Tuple[Fraction, ...]:
        return self.dense()

    def __str__(self) -> str:
        body = ", ".join(f"{format_set(m)}x{q}" for m, q in self.entries)
        return f"BalancedVector(N={self.N}; {body})"


@dataclass(frozen=True)
class SubsetMultiset:
    """
    Multiconjunto de subconjuntos no vacíos de [N].

    Attributes:
        N (int): Tamaño del conjunto base
        counts (Tuple[Tuple[int, int], ...]): (máscara, multiplicidad > 0) en orden canónico
    """
    N: int
    counts: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        check_ground_set(self.N, minimum=1)
        merged: Dict[int, int] = {}
        for mask, count in self.counts:
            if mask <= 0 or mask >= 1 << self.N:
                raise ElementOutOfRange(f"máscara {mask} no es un subconjunto no vacío de [{self.N}]")
            if count < 0:
                raise NegativeEntry(f"multiplicidad negativa en {format_set(mask)}: {count}")
            merged[mask] = merged.get(mask, 0) + int(count)
        counts = tuple(sorted(((m, c) for m, c in merged.items() if c), key=lambda e: canonical_key(e[0])))
        object.__setattr__(self, 'counts', counts)

    @classmethod
    def from_sets(cls, N: int, sets: Iterable[int]) -> 'SubsetMultiset':
        """Una entrada por aparición (repetidos = multiplicidad)."""
        return cls(N, tuple((m, 1) for m in sets))

    def to_vector(self) -> BalancedVector:
        return BalancedVector(self.N, tuple((m, Fraction(c)) for m, c in self.counts))

    def sets(self) -> List[int]:
        """Lista expandida (con repeticiones) en orden canónico."""
        return [m for m, c in self.counts for _ in range(c)]

    @property
    def size(self) -> int:
        return sum(c for _, c in self.counts)


def balance_of(v: BalancedVector) -> Optional[Fraction]:
    """m si todos los elementos quedan cubiertos igual; None si no."""
    cover = v.coverage()
    if all(c == cover[0] for c in cover):
        return cover[0]
    return None


def primitive_vector(v: BalancedVector) -> BalancedVector:
    """v escalado a enteros coprimos."""
    if v.is_zero():
        raise ZeroVector("el vector nulo no tiene forma primitiva")
    ints, _ = primitive([q for _, q in v.entries])
    return BalancedVector(v.N, tuple((m, Fraction(c)) for (m, _), c in zip(v.entries, ints)))


def complexity_of_balanced(v: BalancedVector) -> int:
    """
    Complejidad m de la forma entera primitiva de v.

    Raises:
        ZeroVector: si v = 0
        Unbalanced: si v no es balanceado
    """
    if v.is_zero():
        raise ZeroVector("el vector nulo no tiene complejidad")
    if balance_of(v) is None:
        raise Unbalanced(f"el vector no es balanceado: cobertura {list(map(str, v.coverage()))}")
    return int(balance_of(primitive_vector(v)))


def support_independent(v: BalancedVector) -> bool:
    """Los indicadores de los conjuntos del soporte son linealmente independientes."""
    if not v.support:
        return True
    return rank([indicator(m, v.N) for m in v.support]) == len(v.support)


@dataclass(frozen=True)
class BalancedCertificate:
    """
    Datos de rango detrás de `is_irreducible_balanced`.

    Attributes:
        irreducible (bool): Resultado
        support_size (int): |soporte|
        support_rank (int): Rango de los indicadores del soporte
        solution_dimension (int): dim {(u, m') : B_S u = m' 1}
    """
    irreducible: bool
    support_size: int
    support_rank: int
    solution_dimension: int

    def __bool__(self) -> bool:
        return self.irreducible


def is_irreducible_balanced(v: BalancedVector) -> BalancedCertificate:
    """
    v está en un rayo extremo del cono balanceado.

    Raises:
        ZeroVector: si v = 0
        Unbalanced: si v no es balanceado
    """
    if v.is_zero():
        raise ZeroVector("el vector nulo no es irreducible")
    if balance_of(v) is None:
        raise Unbalanced("el vector no es balanceado")
    support = v.support
    columns = [indicator(m, v.N) for m in support]
    support_rank = rank(columns)
    # sistema homogéneo en (u_I para I en el soporte, m'): B_S u - m' 1 = 0
    system = [[col[i] for col in columns] + [-1] for i in range(v.N)]
    dimension = len(support) + 1 - rank(system)
    return BalancedCertificate(
        irreducible=support_rank == len(support) and dimension == 1,
        support_size=len(support),
        support_rank=support_rank,
        solution_dimension=dimension,
    )


def find_balanced_submultiset(M: SubsetMultiset) -> Optional[SubsetMultiset]:
    """
    Un sub-multiconjunto propio, no vacío y balanceado de M, o None.

    Basta buscar complejidades m' <= m/2: el complemento de un sub-multiconjunto
    balanceado también es balanceado.

    Raises:
        Unbalanced: si M no es balanceado
    """
    m = balance_of(M.to_vector())
    if m is None:
        raise Unbalanced("el multiconjunto no es balanceado")
    m = int(m)
    support = [mask for mask, _ in M.counts]
    limits = [count for _, count in M.counts]
    N = M.N
    # capacidad restante por elemento desde la posición idx en adelante
    remaining = [[0] * N for _ in range(len(support) + 1)]
    for idx in range(len(support) - 1, -1, -1):
        for i in range(N):
            remaining[idx][i] = remaining[idx + 1][i] + (limits[idx] if support[idx] >> i & 1 else 0)

    for target in range(1, m // 2 + 1):
        chosen = [0] * len(support)
        cover = [0] * N

        def search(idx: int) -> bool:
            if idx == len(support):
                return all(c == target for c in cover)
            if any(cover[i] + remaining[idx][i] < target for i in range(N)):
                return False
            mask = support[idx]
            elems = [i for i in range(N) if mask >> i & 1]
            room = min(target - cover[i] for i in elems)
            for c in range(min(room, limits[idx]), -1, -1):
                chosen[idx] = c
                for i in elems:
                    cover[i] += c
                if search(idx + 1):
                    return True
                for i in elems:
                    cover[i] -= c
            chosen[idx] = 0
            return False

        if search(0):
            witness = SubsetMultiset(N, tuple((mask, c) for mask, c in zip(support, chosen) if c))
            logger.debug(f"[BAL] sub-multiconjunto balanceado con m'={target}: {witness.counts}")
            return witness
    return None


def is_z_irreducible(M: SubsetMultiset) -> bool:
    """Ningún sub-multiconjunto propio no vacío de M es balanceado."""
    return find_balanced_submultiset(M) is None
