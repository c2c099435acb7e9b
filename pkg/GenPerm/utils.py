"""
GenPerm.utils

Funciones utilitarias compartidas por múltiples módulos del sistema:
racionales exactos, enteros primitivos y conteo de bits.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from GenPerm.errors import FormatError

Rational = Union[int, Fraction]


def popcount(x: int) -> int:
    """Cantidad de bits encendidos de un entero no negativo."""
    return bin(x).count("1")


def to_fraction(value) -> Fraction:
    """
    Convierte un valor de entrada a Fraction exacta.

    Acepta int, Fraction o strings "p/q" / "p". Los float se rechazan:
    en este paquete no existe camino de punto flotante.

    Args:
        value: Valor a convertir

    Returns:
        Fraction: El racional exacto
    """
    if isinstance(value, bool):
        raise FormatError(f"valor booleano no es un racional: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(f"racional inválido {value!r}: {e}") from e
    raise FormatError(f"tipo no soportado para un racional: {type(value).__name__}")


def format_rational(value: Rational) -> str:
    """Serializa un racional como "p/q" (siempre con denominador)."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, (abs(v) for v in values), 0)


def clear_denominators(values: Sequence[Rational]) -> Tuple[List[int], int]:
    """
    Multiplica por el mcm de los denominadores.

    Returns:
        tuple: (enteros, factor) con enteros[i] = factor * values[i]
    """
    fracs = [Fraction(v) for v in values]
    factor = reduce(lcm, (q.denominator for q in fracs), 1)
    return [int(q * factor) for q in fracs], factor


def primitive(values: Sequence[Rational]) -> Tuple[List[int], Fraction]:
    """
    Escala un vector racional no nulo a enteros coprimos.

    Conserva el signo (nunca invierte la dirección).

    Returns:
        tuple: (vector primitivo, escala) con primitivo = escala * values
    """
    ints, factor = clear_denominators(values)
    g = gcd_all(ints)
    if g == 0:
        return ints, Fraction(0)
    return [v // g for v in ints], Fraction(factor, g)


def primitive_int(values: Sequence[int]) -> List[int]:
    """Versión entera de `primitive` usada en los lazos calientes del cono."""
    g = gcd_all(values)
    if g <= 1:
        return list(values)
    return [v // g for v in values]


def dot(a: Sequence[Rational], b: Sequence[Rational]):
    return sum(x * y for x, y in zip(a, b))
