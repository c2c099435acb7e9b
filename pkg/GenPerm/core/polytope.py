"""
Vértices de permutoedros generalizados

El permutoedro generalizado de f es {x : x·1_I >= f(I), x·1_[n] = f([n])}.
Con f supermodular y f(∅) = 0 el algoritmo greedy sobre cada permutación
produce exactamente sus vértices.
"""

import logging
from fractions import Fraction
from itertools import permutations
from typing import List, Sequence, Tuple

from GenPerm.config import GP_VERTEX_MAX_N
from GenPerm.core.checks import require_supermodular
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import bit, check_ground_set
from GenPerm.errors import GenPermError, UnsortedInput
from GenPerm.utils import Rational, to_fraction

logger = logging.getLogger('GenPerm')

Point = Tuple[Fraction, ...]


def greedy_vertex(f: SetFunction, sigma: Sequence[int]) -> Point:
    """x_{σ_k} = f({σ_1..σ_k}) - f({σ_1..σ_{k-1}})."""
    x = [Fraction(0)] * f.n
    prefix = 0
    for element in sigma:
        nxt = prefix | bit(element)
        x[element - 1] = f(nxt) - f(prefix)
        prefix = nxt
    return tuple(x)


def gp_vertices(f: SetFunction) -> List[Point]:
    """
    Vértices del permutoedro generalizado de f, sin duplicados y ordenados.

    Raises:
        NotSupermodular: si f no es supermodular
        GenPermError: si f(∅) != 0
    """
    check_ground_set(f.n, maximum=GP_VERTEX_MAX_N)
    require_supermodular(f)
    if f(0) != 0:
        raise GenPermError(f"gp_vertices requiere f(∅) = 0 (llegó {f(0)})")
    vertices = {greedy_vertex(f, sigma) for sigma in permutations(range(1, f.n + 1))}
    logger.debug(f"[GP] n={f.n}: {len(vertices)} vértices")
    return sorted(vertices)


def in_polytope(f: SetFunction, x: Sequence[Rational]) -> bool:
    """x·1_I >= f(I) para todo I y x·1_[n] = f([n])."""
    size = 1 << f.n
    totals = [Fraction(0)] * size
    for mask in range(1, size):
        low = mask & -mask
        totals[mask] = totals[mask ^ low] + x[low.bit_length() - 1]
    if totals[size - 1] != f(size - 1):
        return False
    return all(totals[m] >= f(m) for m in range(size))


def permutohedron_from_point(x: Sequence[Rational]) -> SetFunction:
    """
    f(I) = x_1 + ... + x_|I| para x ordenado de forma no decreciente.

    Raises:
        UnsortedInput: si x no está ordenado
    """
    point = [to_fraction(v) for v in x]
    if any(a > b for a, b in zip(point, point[1:])):
        raise UnsortedInput(f"el punto debe estar ordenado de forma no decreciente: {list(map(str, point))}")
    prefix = [Fraction(0)]
    for v in point:
        prefix.append(prefix[-1] + v)
    return SetFunction.by_cardinality(len(point), lambda k: prefix[k])
