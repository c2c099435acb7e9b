"""
SupermodularityVector - El mapa T: f -> s

T envía una función de conjunto a sus valores de supermodularidad sobre los
pares cercanos. Su núcleo son las funciones modulares y su imagen queda
caracterizada por la identidad de cuatro términos entre pares vecinos
(ver `find_image_violation`). `reconstruct` invierte T sobre la imagen.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, List, Optional, Tuple

from GenPerm.algebra import rank, solve
from GenPerm.core.checks import supermodularity_value
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import (
    ClosePair, bit, canonical_subsets, close_pair_index, close_pairs,
    elements_of, format_set, full_mask, make_close_pair, submasks,
)
from GenPerm.errors import MismatchedGroundSet, NotInImage
from GenPerm.utils import popcount, to_fraction

logger = logging.getLogger('GenPerm')


@dataclass(frozen=True)
class SupermodularityVector:
    """
    Vector s indexado por los pares cercanos de [n] (orden canónico).

    Attributes:
        n (int): Tamaño del conjunto base
        entries (Tuple[Fraction, ...]): entries[k] = s del k-ésimo par de close_pairs(n)
    """
    n: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        expected = len(close_pairs(self.n))
        if len(self.entries) != expected:
            raise MismatchedGroundSet(
                f"se esperaban {expected} entradas para n={self.n}, llegaron {len(self.entries)}"
            )
        object.__setattr__(self, 'entries', tuple(to_fraction(v) for v in self.entries))

    @classmethod
    def from_pairs(cls, n: int, values: dict) -> 'SupermodularityVector':
        """Desde un dict ClosePair -> valor; los pares ausentes valen 0."""
        index = close_pair_index(n)
        entries = [Fraction(0)] * len(index)
        for pair, value in values.items():
            entries[index[pair]] = to_fraction(value)
        return cls(n, tuple(entries))

    @classmethod
    def zeros(cls, n: int) -> 'SupermodularityVector':
        return cls(n, (Fraction(0),) * len(close_pairs(n)))

    @classmethod
    def ones(cls, n: int) -> 'SupermodularityVector':
        return cls(n, (Fraction(1),) * len(close_pairs(n)))

    @property
    def pairs(self) -> Tuple[ClosePair, ...]:
        return close_pairs(self.n)

    def __getitem__(self, pair: ClosePair) -> Fraction:
        return self.entries[close_pair_index(self.n)[pair]]

    def at(self, meet: int, x: int, y: int) -> Fraction:
        """s del par (meet ∪ {x}, meet ∪ {y}), en cualquier orden de x, y."""
        return self[make_close_pair(meet, x, y)]

    def items(self):
        return zip(self.pairs, self.entries)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.entries)

    def tight_indices(self) -> List[int]:
        """Índices de pares con s = 0."""
        return [k for k, v in enumerate(self.entries) if v == 0]

    def support_layers(self) -> List[int]:
        """Capas t (|I ∩ J| = t - 1) en las que s tiene alguna entrada no nula."""
        return sorted({pair.layer for pair, v in self.items() if v != 0})

    def __add__(self, other: 'SupermodularityVector') -> 'SupermodularityVector':
        if other.n != self.n:
            raise MismatchedGroundSet(f"n={self.n} vs n={other.n}")
        return SupermodularityVector(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> 'SupermodularityVector':
        c = to_fraction(c)
        return SupermodularityVector(self.n, tuple(c * a for a in self.entries))


@dataclass(frozen=True)
class ImageViolation:
    """
    Instancia de la identidad de cuatro términos que falla.

    s(I; i,j) + s(I∪{j}; i,k) = s(I; i,k) + s(I∪{k}; i,j)
    """
    i: int
    j: int
    k: int
    meet: int
    lhs: Fraction
    rhs: Fraction

    def describe(self) -> str:
        return (
            f"i={self.i}, j={self.j}, k={self.k}, I={format_set(self.meet)}: "
            f"{self.lhs} != {self.rhs}"
        )


def apply_t(f: SetFunction) -> SupermodularityVector:
    """s_{I,J} = f(I∩J) + f(I∪J) - f(I) - f(J) en cada par cercano."""
    return SupermodularityVector(f.n, tuple(supermodularity_value(f, p) for p in close_pairs(f.n)))


def _image_conditions(n: int):
    """(i, j, k, I) para i distinto de j < k e I ⊆ [n] \\ {i, j, k}."""
    everything = full_mask(n)
    for i in range(1, n + 1):
        others = [e for e in range(1, n + 1) if e != i]
        for j, k in combinations(others, 2):
            rest = everything & ~(bit(i) | bit(j) | bit(k))
            for meet in sorted(submasks(rest)):
                yield i, j, k, meet


def find_image_violation(s: SupermodularityVector) -> Optional[ImageViolation]:
    """Primera identidad de cuatro términos que falla, o None si s está en im T."""
    for i, j, k, meet in _image_conditions(s.n):
        lhs = s.at(meet, i, j) + s.at(meet | bit(j), i, k)
        rhs = s.at(meet, i, k) + s.at(meet | bit(k), i, j)
        if lhs != rhs:
            return ImageViolation(i, j, k, meet, lhs, rhs)
    return None


def in_image_t(s: SupermodularityVector) -> bool:
    return find_image_violation(s) is None


def reconstruct(s: SupermodularityVector) -> SetFunction:
    """
    La única f con f = 0 en |I| <= 1 y T f = s.

    Recursión por cardinalidad con (i, j) = los dos menores elementos de J:
    f(J) = s(I; i, j) + f(I ∪ {i}) + f(I ∪ {j}) - f(I), con I = J \\ {i, j}.

    Raises:
        NotInImage: si s no está en la imagen de T
    """
    violation = find_image_violation(s)
    if violation is not None:
        raise NotInImage(f"s no está en la imagen de T: {violation.describe()}", violation)
    return _build_from_layers(s, lambda mask: elements_of(mask)[:2])


def reconstruct_with_order(s: SupermodularityVector, choose: Callable[[int], List[int]]) -> SetFunction:
    """
    Variante de `reconstruct` con la elección de (i, j) delegada a `choose(J)`.

    Sirve para verificar que el resultado no depende de la elección.
    """
    if not in_image_t(s):
        raise NotInImage("s no está en la imagen de T")
    return _build_from_layers(s, choose)


def _build_from_layers(s: SupermodularityVector, choose) -> SetFunction:
    values = [Fraction(0)] * (1 << s.n)
    for mask in canonical_subsets(s.n):
        if popcount(mask) < 2:
            continue
        i, j = choose(mask)
        rest = mask & ~(bit(i) | bit(j))
        values[mask] = s.at(rest, i, j) + values[rest | bit(i)] + values[rest | bit(j)] - values[rest]
    return SetFunction(s.n, tuple(values))


# --- T como matriz ---

def transform_matrix(n: int) -> List[List[int]]:
    """Matriz |P_n| x 2^n de T (columnas indexadas por máscara)."""
    rows = []
    for pair in close_pairs(n):
        row = [0] * (1 << n)
        row[pair.meet] += 1
        row[pair.join] += 1
        row[pair.left] -= 1
        row[pair.right] -= 1
        rows.append(row)
    return rows


def image_dimension(n: int) -> int:
    """Rango exacto de T; se espera 2^n - n - 1."""
    return rank(transform_matrix(n))


def image_condition_matrix(n: int) -> List[List[int]]:
    """Una fila por identidad de cuatro términos, sobre las coordenadas de s."""
    index = close_pair_index(n)
    rows = []
    for i, j, k, meet in _image_conditions(n):
        row = [0] * len(index)
        row[index[make_close_pair(meet, i, j)]] += 1
        row[index[make_close_pair(meet | bit(j), i, k)]] += 1
        row[index[make_close_pair(meet, i, k)]] -= 1
        row[index[make_close_pair(meet | bit(k), i, j)]] -= 1
        rows.append(row)
    return rows


def image_condition_rank(n: int) -> int:
    """Rango de las identidades; se espera |P_n| - 2^n + n + 1."""
    return rank(image_condition_matrix(n))


def in_image_by_solving(s: SupermodularityVector) -> bool:
    """Existe f con T f = s (sistema lineal exacto)."""
    return solve(transform_matrix(s.n), s.entries) is not None


def expected_image_dimension(n: int) -> int:
    return (1 << n) - n - 1


def expected_condition_rank(n: int) -> int:
    return len(close_pairs(n)) - expected_image_dimension(n)
