"""
Chequeos de supermodularidad, modularidad y equivalencia

Por el lema de pares cercanos basta revisar s_{I,J} >= 0 en los
C(n,2)·2^(n-2) pares cercanos; el chequeo completo sobre todos los pares
I, J queda solo como oráculo de tests.
"""

import logging
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from GenPerm.core.setfunction import SetFunction, modular_part
from GenPerm.core.subsets import ClosePair, bit, close_pairs
from GenPerm.errors import (
    ElementOutOfRange, MismatchedGroundSet, ModularInput, NotSupermodular,
)
from GenPerm.utils import primitive

logger = logging.getLogger('GenPerm')


def supermodularity_value(f: SetFunction, pair: ClosePair) -> Fraction:
    """s_{I,J} = f(I∩J) + f(I∪J) - f(I) - f(J)."""
    return f(pair.meet) + f(pair.join) - f(pair.left) - f(pair.right)


def iter_supermodularity(f: SetFunction) -> Iterator[Tuple[ClosePair, Fraction]]:
    """(par, s_par) en orden canónico; vacío si n < 2."""
    if f.n < 2:
        return iter(())
    return ((pair, supermodularity_value(f, pair)) for pair in close_pairs(f.n))


def first_violation(f: SetFunction) -> Optional[Tuple[ClosePair, Fraction]]:
    """Primer par cercano con s < 0, o None si f es supermodular."""
    for pair, value in iter_supermodularity(f):
        if value < 0:
            return pair, value
    return None


def is_supermodular(f: SetFunction) -> bool:
    return first_violation(f) is None


def is_modular(f: SetFunction) -> bool:
    return all(value == 0 for _, value in iter_supermodularity(f))


def is_supermodular_full(f: SetFunction) -> bool:
    """Chequeo cuadrático sobre todos los pares I, J (oráculo)."""
    size = 1 << f.n
    for i in range(size):
        for j in range(i + 1, size):
            if f(i & j) + f(i | j) < f(i) + f(j):
                return False
    return True


def require_supermodular(f: SetFunction) -> None:
    """Lanza NotSupermodular con el par que falla."""
    violation = first_violation(f)
    if violation is not None:
        pair, value = violation
        raise NotSupermodular(f"la función no es supermodular: s{pair} = {value}")


def standardize(f: SetFunction) -> SetFunction:
    """
    Representante estándar de la clase de equivalencia de f.

    Resta la parte modular (f = 0 en |I| <= 1) y escala a enteros con
    máximo común divisor 1.

    Raises:
        NotSupermodular: si f no es supermodular
        ModularInput: si f es modular (no hay representante con mcd 1)
    """
    require_supermodular(f)
    if is_modular(f):
        raise ModularInput("una función modular no tiene representante estándar")
    shifted = f - modular_part(f).to_set_function()
    ints, _ = primitive(shifted.values)
    return SetFunction(f.n, tuple(ints))


def is_standard(f: SetFunction) -> bool:
    """f = 0 en |I| <= 1 y valores enteros."""
    if f(0) != 0 or any(f(bit(i)) != 0 for i in range(1, f.n + 1)):
        return False
    return f.is_integral()


def equivalent(f: SetFunction, g: SetFunction) -> bool:
    """f y g difieren en una función modular."""
    if f.n != g.n:
        raise MismatchedGroundSet(f"conjuntos base distintos: n={f.n} vs n={g.n}")
    return is_modular(f - g)


def discrete_derivative(f: SetFunction, i: int) -> SetFunction:
    """
    (∂_i f)(I) = f(I ∪ {i}) - f(I) sobre [n] \\ {i}, reindexado en orden.

    Raises:
        ElementOutOfRange: si i no está en [n]
    """
    if not isinstance(i, int) or i < 1 or i > f.n:
        raise ElementOutOfRange(f"elemento {i!r} fuera de [1, {f.n}]")
    low = bit(i) - 1
    target = bit(i)

    def lifted(mask: int) -> int:
        return (mask & low) | ((mask & ~low) << 1)

    return SetFunction.from_callable(
        f.n - 1, lambda mask: f(lifted(mask) | target) - f(lifted(mask))
    )


def second_derivative_check(f: SetFunction) -> bool:
    """f supermodular sii ∂_j ∂_i f >= 0 para todo i != j."""
    for i in range(1, f.n + 1):
        first = discrete_derivative(f, i)
        for j in range(1, first.n + 1):
            if any(v < 0 for v in discrete_derivative(first, j).values):
                return False
    return True


def is_constant(f: SetFunction) -> bool:
    return all(v == f(0) for v in f.values)
