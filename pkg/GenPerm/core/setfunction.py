"""
SetFunction - Función de conjunto con valores racionales exactos

Una SetFunction asigna un racional a cada uno de los 2^n subconjuntos de [n].
Los valores se guardan en una tupla indexada por máscara, de modo que la
evaluación es O(1) y la instancia es inmutable (se puede compartir entre hilos).

f(∅) se almacena, no se asume 0: las clases de equivalencia no lo fijan.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Sequence, Tuple

from GenPerm.core.subsets import (
    bit, canonical_subsets, check_ground_set, elements_of, format_set, full_mask,
)
from GenPerm.errors import MismatchedGroundSet
from GenPerm.utils import Rational, to_fraction


@dataclass(frozen=True)
class SetFunction:
    """
    Función f: 2^[n] -> Q.

    Attributes:
        n (int): Tamaño del conjunto base
        values (Tuple[Fraction, ...]): values[mask] = f(mask), largo 2^n
    """
    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        check_ground_set(self.n)
        if len(self.values) != 1 << self.n:
            raise MismatchedGroundSet(
                f"se esperaban {1 << self.n} valores para n={self.n}, llegaron {len(self.values)}"
            )
        object.__setattr__(self, 'values', tuple(to_fraction(v) for v in self.values))

    # --- constructores ---

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], Rational]) -> 'SetFunction':
        """Evalúa fn(mask) en cada subconjunto."""
        check_ground_set(n)
        return cls(n, tuple(fn(mask) for mask in range(1 << n)))

    @classmethod
    def from_mapping(cls, n: int, mapping: Dict[int, Rational]) -> 'SetFunction':
        """Desde un dict máscara -> valor que cubre todos los subconjuntos."""
        check_ground_set(n)
        missing = [m for m in range(1 << n) if m not in mapping]
        if missing:
            raise MismatchedGroundSet(f"faltan {len(missing)} subconjuntos (p. ej. máscara {missing[0]})")
        return cls(n, tuple(mapping[m] for m in range(1 << n)))

    @classmethod
    def zeros(cls, n: int) -> 'SetFunction':
        check_ground_set(n)
        return cls(n, (Fraction(0),) * (1 << n))

    @classmethod
    def by_cardinality(cls, n: int, fn: Callable[[int], Rational]) -> 'SetFunction':
        """Función simétrica f(I) = fn(|I|)."""
        return cls.from_callable(n, lambda mask: fn(bin(mask).count("1")))

    # --- evaluación ---

    def __call__(self, mask: int) -> Fraction:
        return self.values[mask]

    def at(self, *elements: int) -> Fraction:
        """f evaluada en el conjunto de elementos dados (1-based)."""
        mask = 0
        for e in elements:
            mask |= bit(e)
        return self.values[mask]

    @property
    def full(self) -> Fraction:
        return self.values[full_mask(self.n)]

    def layer_values(self) -> Tuple[Tuple[int, Fraction], ...]:
        """Pares (máscara, valor) en orden canónico; usado por formatos y logs."""
        return tuple((m, self.values[m]) for m in canonical_subsets(self.n))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    # --- aritmética ---

    def _check_same(self, other: 'SetFunction') -> None:
        if not isinstance(other, SetFunction):
            raise TypeError(f"se esperaba SetFunction, llegó {type(other).__name__}")
        if other.n != self.n:
            raise MismatchedGroundSet(f"conjuntos base distintos: n={self.n} vs n={other.n}")

    def __add__(self, other: 'SetFunction') -> 'SetFunction':
        self._check_same(other)
        return SetFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: 'SetFunction') -> 'SetFunction':
        self._check_same(other)
        return SetFunction(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> 'SetFunction':
        return SetFunction(self.n, tuple(-a for a in self.values))

    def scale(self, c: Rational) -> 'SetFunction':
        c = to_fraction(c)
        return SetFunction(self.n, tuple(c * a for a in self.values))

    def __mul__(self, c: Rational) -> 'SetFunction':
        return self.scale(c)

    __rmul__ = __mul__

    def shift(self, c: Rational) -> 'SetFunction':
        """f + c (constante, que es modular)."""
        c = to_fraction(c)
        return SetFunction(self.n, tuple(a + c for a in self.values))

    def key(self) -> Tuple[Fraction, ...]:
        """Clave de orden canónico: valores en orden canónico de subconjuntos."""
        return tuple(v for _, v in self.layer_values())

    def __str__(self) -> str:
        body = ", ".join(f"{format_set(m)}:{v}" for m, v in self.layer_values())
        return f"SetFunction(n={self.n}; {body})"


@dataclass(frozen=True)
class ModularFunction:
    """
    Función modular g(I) = base + Σ_{i∈I} increments[i-1].

    Attributes:
        base (Fraction): Valor en ∅
        increments (Tuple[Fraction, ...]): Un incremento por elemento
    """
    base: Fraction
    increments: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'base', to_fraction(self.base))
        object.__setattr__(self, 'increments', tuple(to_fraction(c) for c in self.increments))

    @property
    def n(self) -> int:
        return len(self.increments)

    def __call__(self, mask: int) -> Fraction:
        return self.base + sum((self.increments[e - 1] for e in elements_of(mask)), Fraction(0))

    def to_set_function(self) -> SetFunction:
        return SetFunction.from_callable(self.n, self)


def modular_part(f: SetFunction) -> ModularFunction:
    """La única función modular que coincide con f en los conjuntos de tamaño <= 1."""
    base = f(0)
    return ModularFunction(base, tuple(f(bit(i)) - base for i in range(1, f.n + 1)))


def modular(increments: Sequence[Rational], base: Rational = 0) -> SetFunction:
    """Atajo: SetFunction de la función modular dada."""
    return ModularFunction(base, tuple(increments)).to_set_function()
