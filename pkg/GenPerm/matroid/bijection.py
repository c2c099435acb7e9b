"""
Biyección entre matroides sin loops y funciones supermodulares simples

M  ->  f(I) = nullity_M(I)
f  ->  M cuyas bases son los complementos de los soportes de los vértices
       del permutoedro generalizado de f (vértices en {0,1}^n)
"""

import logging
from dataclasses import dataclass
from typing import Optional

from GenPerm.core.checks import discrete_derivative, is_constant, is_modular, is_standard, is_supermodular
from GenPerm.core.polytope import gp_vertices
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import canonical_subsets, elements_of, full_mask
from GenPerm.errors import HasLoop, InvariantViolation, NotSimple, NotStandard, NotSupermodular, NotZeroOne
from GenPerm.matroid.matroid import Matroid
from GenPerm.monotone import is_irreducible_nondecreasing
from GenPerm.utils import popcount

logger = logging.getLogger('GenPerm')


def matroid_to_supermodular(M: Matroid) -> SetFunction:
    """
    La función de nulidad de M (estándar, supermodular y simple).

    Raises:
        HasLoop: si M tiene loops
    """
    loops = M.loops()
    if loops:
        raise HasLoop(f"el matroide tiene loops: {list(loops)}")
    return SetFunction.from_callable(M.n, M.nullity)


def is_simple(f: SetFunction) -> bool:
    """
    Cada ∂_i f es constante o una no decreciente irreducible.

    Raises:
        NotSupermodular: si f no es supermodular
    """
    if not is_supermodular(f):
        raise NotSupermodular("is_simple requiere una función supermodular")
    for i in range(1, f.n + 1):
        derivative = discrete_derivative(f, i)
        if not is_constant(derivative) and is_irreducible_nondecreasing(derivative) is None:
            return False
    return True


def supermodular_to_matroid(f: SetFunction) -> Matroid:
    """
    Matroide sin loops cuya nulidad es f.

    Raises:
        NotSupermodular: si f no es supermodular
        NotStandard: si f no vale 0 en los conjuntos de tamaño <= 1
        NotSimple: si algún ∂_i f no es constante ni irreducible
        NotZeroOne: si un vértice del permutoedro no está en {0,1}^n
    """
    if not is_supermodular(f):
        raise NotSupermodular("supermodular_to_matroid requiere una función supermodular")
    if not is_standard(f):
        raise NotStandard("se esperaba el representante estándar (f = 0 en |I| <= 1)")
    if not is_simple(f):
        raise NotSimple("la función no es simple")
    full = full_mask(f.n)
    bases = []
    for vertex in gp_vertices(f):
        if any(x not in (0, 1) for x in vertex):
            raise NotZeroOne(f"vértice fuera de {{0,1}}^n: {vertex}")
        support = sum(1 << i for i, x in enumerate(vertex) if x == 1)
        bases.append(full & ~support)
    M = Matroid(f.n, tuple(bases))
    if matroid_to_supermodular(M) != f:
        raise InvariantViolation(f"la nulidad de {M} no reproduce la función de entrada")
    return M


@dataclass(frozen=True)
class SimpleSplit:
    """
    f(I) = g1(I ∩ S1) + g2(I ∩ S2) con g1, g2 no modulares.

    Attributes:
        S1 (int): Máscara de la primera parte (contiene al elemento 1)
        S2 (int): Máscara del complemento
        g1 (SetFunction): f restringida a S1, reindexada
        g2 (SetFunction): f restringida a S2, reindexada
    """
    S1: int
    S2: int
    g1: SetFunction
    g2: SetFunction


def _restriction(f: SetFunction, part: int) -> SetFunction:
    size = popcount(part)
    elements = elements_of(part)

    def lifted(mask: int) -> int:
        return sum(1 << (elements[k] - 1) for k in range(size) if mask >> k & 1)

    return SetFunction.from_callable(size, lambda mask: f(lifted(mask)))


def split_simple_function(f: SetFunction) -> Optional[SimpleSplit]:
    """
    Partición [n] = S1 ∪ S2 que separa una función simple reducible, o None.

    Solo se aceptan particiones donde ambas piezas son no modulares.

    Raises:
        NotSupermodular / NotStandard / NotSimple: como `supermodular_to_matroid`
    """
    if not is_supermodular(f):
        raise NotSupermodular("split_simple_function requiere una función supermodular")
    if not is_standard(f):
        raise NotStandard("se esperaba el representante estándar (f = 0 en |I| <= 1)")
    if not is_simple(f):
        raise NotSimple("la función no es simple")
    full = full_mask(f.n)
    for S1 in canonical_subsets(f.n)[1:-1]:
        if not S1 & 1:
            continue
        S2 = full & ~S1
        if any(f(I) != f(I & S1) + f(I & S2) for I in range(1 << f.n)):
            continue
        g1, g2 = _restriction(f, S1), _restriction(f, S2)
        if is_modular(g1) or is_modular(g2):
            continue
        logger.debug(f"[MATROID] separación {elements_of(S1)} | {elements_of(S2)}")
        return SimpleSplit(S1=S1, S2=S2, g1=g1, g2=g2)
    return None
