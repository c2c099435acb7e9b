"""
ConeH / Ray - Representación H de un cono y sus rayos extremos

ConeH guarda desigualdades a·x >= 0 y ecuaciones a·x = 0 con coeficientes
racionales exactos. Ray guarda una dirección entera primitiva y el conjunto
de desigualdades ajustadas (a·x = 0) en esa dirección.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple

from GenPerm.errors import DimensionMismatch
from GenPerm.utils import clear_denominators, dot, to_fraction


@dataclass(frozen=True)
class ConeH:
    """
    Cono {x ∈ Q^dim : A x >= 0, E x = 0}.

    Attributes:
        dim (int): Dimensión ambiente
        inequalities (Tuple[Tuple[Fraction, ...], ...]): Filas a con a·x >= 0
        equalities (Tuple[Tuple[Fraction, ...], ...]): Filas a con a·x = 0
    """
    dim: int
    inequalities: Tuple[Tuple[Fraction, ...], ...]
    equalities: Tuple[Tuple[Fraction, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionMismatch(f"dimensión inválida: {self.dim!r}")
        for kind in ('inequalities', 'equalities'):
            rows = tuple(tuple(to_fraction(v) for v in row) for row in getattr(self, kind))
            for idx, row in enumerate(rows):
                if len(row) != self.dim:
                    raise DimensionMismatch(
                        f"{kind}[{idx}] tiene largo {len(row)}, se esperaba {self.dim}"
                    )
            object.__setattr__(self, kind, rows)

    def integer_inequalities(self) -> List[List[int]]:
        """Cada desigualdad escalada a enteros (mismo semiespacio)."""
        return [clear_denominators(row)[0] for row in self.inequalities]

    def integer_equalities(self) -> List[List[int]]:
        return [clear_denominators(row)[0] for row in self.equalities]

    def contains(self, x: Sequence) -> bool:
        return (all(dot(a, x) >= 0 for a in self.inequalities)
                and all(dot(a, x) == 0 for a in self.equalities))

    def permuted(self, order: Sequence[int]) -> 'ConeH':
        """El mismo cono con las desigualdades reordenadas."""
        return ConeH(self.dim, tuple(self.inequalities[i] for i in order), self.equalities)


@dataclass(frozen=True)
class Ray:
    """
    Rayo extremo.

    Attributes:
        direction (Tuple[int, ...]): Vector entero primitivo (mcd 1)
        tight_set (FrozenSet[int]): Índices de desigualdades con a·x = 0
    """
    direction: Tuple[int, ...]
    tight_set: FrozenSet[int]

    def as_fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v) for v in self.direction)
