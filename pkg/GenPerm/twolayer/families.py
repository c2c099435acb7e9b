"""
Familia K de funciones irreducibles con supermodularidades en dos capas

- alpha / beta / gamma: las funciones de base y sus combinaciones
- from_subset: S ↦ Σ_{k∈S} β_k - max(0, |S|-(t+1)) α_t - max(0, |S|-(n-t)) α_{t+1}
- enumerate_two_layer: K completa, con chequeo de dim span K = n + 1
- two_layer_oracle: comparación contra los rayos del cono supermodular
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from GenPerm.algebra import rank
from GenPerm.cone import enumerate_irreducible_supermodular
from GenPerm.config import TWO_LAYER_ORACLE_MAX_N
from GenPerm.core.checks import is_supermodular, standardize
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import ClosePair, check_ground_set, elements_of, full_mask
from GenPerm.errors import InadmissibleSubset, InvariantViolation, ParamOutOfRange
from GenPerm.transform import apply_t
from GenPerm.utils import popcount

logger = logging.getLogger('GenPerm')


@dataclass(frozen=True)
class TwoLayerSpec:
    """
    Parámetros (n, t) de la familia K: supermodularidades en las capas t y t+1.

    Attributes:
        n (int): Tamaño del conjunto base
        t (int): Capa inferior, 1 <= t <= n - 2
    """
    n: int
    t: int

    def __post_init__(self):
        check_ground_set(self.n)
        if not 1 <= self.t <= self.n - 2:
            raise ParamOutOfRange(f"t={self.t} fuera de 1..{self.n - 2} para n={self.n}")

    @property
    def layers(self) -> Tuple[int, int]:
        return self.t, self.t + 1


def _check_element(n: int, k: int, name: str) -> None:
    if not 1 <= k <= n:
        raise ParamOutOfRange(f"{name}={k} fuera de [1, {n}]")


def alpha(n: int, t: int) -> SetFunction:
    """
    α_{n,t}(I) = max(0, |I| - t).

    Raises:
        ParamOutOfRange: si t está fuera de 1..n-1
    """
    check_ground_set(n)
    if not 1 <= t <= n - 1:
        raise ParamOutOfRange(f"t={t} fuera de 1..{n - 1} para α con n={n}")
    return SetFunction.by_cardinality(n, lambda size: max(0, size - t))


def beta(n: int, t: int, k: int) -> SetFunction:
    """
    β_{n,t,k}(I) = max(0, |I ∖ {k}| - t).

    Raises:
        ParamOutOfRange: si t está fuera de 1..n-2 o k fuera de [n]
    """
    TwoLayerSpec(n, t)
    _check_element(n, k, 'k')
    others = full_mask(n) & ~(1 << (k - 1))
    return SetFunction.from_callable(n, lambda I: max(0, popcount(I & others) - t))


def gamma(n: int, t: int, l: int) -> SetFunction:
    """
    γ_{n,t,ℓ} = Σ_{k≠ℓ} β_{n,t,k} - (n-t-2) α_{n,t} - (t-1) α_{n,t+1}.

    Raises:
        ParamOutOfRange: si t está fuera de 1..n-2 o ℓ fuera de [n]
        InvariantViolation: si el resultado no es supermodular
    """
    TwoLayerSpec(n, t)
    _check_element(n, l, 'l')
    total = SetFunction.zeros(n)
    for k in range(1, n + 1):
        if k != l:
            total = total + beta(n, t, k)
    result = total - alpha(n, t).scale(n - t - 2) - alpha(n, t + 1).scale(t - 1)
    if not is_supermodular(result):
        raise InvariantViolation(f"γ_{{{n},{t},{l}}} no es supermodular")
    return result


def admissible(n: int, t: int, size: int) -> bool:
    """
    |S| da un miembro de K: |S| = 1, min(t+1, n-t) < |S| < max(t+1, n-t),
    o |S| = n - 1 cuando n - 1 > min(t+1, n-t).
    """
    low, high = min(t + 1, n - t), max(t + 1, n - t)
    return size == 1 or low < size < high or (size == n - 1 and size > low)


def from_subset(n: int, t: int, S: int) -> SetFunction:
    """
    Representante estándar del miembro de K asociado a S.

    Raises:
        ParamOutOfRange: si t está fuera de 1..n-2
        InadmissibleSubset: si |S| no cumple la condición de cardinalidad
    """
    TwoLayerSpec(n, t)
    if S <= 0 or S > full_mask(n):
        raise InadmissibleSubset(f"S debe ser un subconjunto no vacío de [{n}]")
    size = popcount(S)
    if not admissible(n, t, size):
        low, high = min(t + 1, n - t), max(t + 1, n - t)
        raise InadmissibleSubset(
            f"|S|={size} no es admisible para (n={n}, t={t}): se requiere |S|=1, "
            f"{low} < |S| < {high}, o |S|={n - 1} > {low}"
        )
    total = SetFunction.zeros(n)
    for k in elements_of(S):
        total = total + beta(n, t, k)
    total = total - alpha(n, t).scale(max(0, size - (t + 1)))
    total = total - alpha(n, t + 1).scale(max(0, size - (n - t)))
    return standardize(total)


def span_dimension(n: int, t: int, family: Optional[Sequence[SetFunction]] = None) -> int:
    """Rango exacto de span K."""
    if family is None:
        family = enumerate_two_layer(n, t)
    return rank([f.values for f in family])


def enumerate_two_layer(n: int, t: int) -> List[SetFunction]:
    """
    K = {α_{n,t}, α_{n,t+1}} ∪ {from_subset(S) : S admisible}, en orden canónico.

    Raises:
        ParamOutOfRange: si t está fuera de 1..n-2
        InvariantViolation: si dim span K != n + 1
    """
    TwoLayerSpec(n, t)
    members = {alpha(n, t), alpha(n, t + 1)}
    for size in range(1, n + 1):
        if not admissible(n, t, size):
            continue
        for chosen in combinations(range(1, n + 1), size):
            S = sum(1 << (k - 1) for k in chosen)
            members.add(from_subset(n, t, S))
    family = sorted(members, key=SetFunction.key)
    dimension = span_dimension(n, t, family)
    if dimension != n + 1:
        raise InvariantViolation(f"dim span K = {dimension} para (n={n}, t={t}), se esperaba {n + 1}")
    logger.debug(f"[2LAYER] n={n} t={t}: {len(family)} funciones")
    return family


def verify_two_layer_identity(n: int, t: int) -> bool:
    """Σ_k β_{n,t,k} = (n-t-1) α_{n,t} + t α_{n,t+1}."""
    TwoLayerSpec(n, t)
    left = SetFunction.zeros(n)
    for k in range(1, n + 1):
        left = left + beta(n, t, k)
    right = alpha(n, t).scale(n - t - 1) + alpha(n, t + 1).scale(t)
    return left == right


def layer_support(f: SetFunction) -> List[int]:
    """Capas t con s = T f no nulo en algún par de P_{n,t}."""
    return apply_t(f).support_layers()


def separating_pair(f: SetFunction, g: SetFunction) -> Optional[ClosePair]:
    """Primer par cercano donde f es estrictamente supermodular y g modular."""
    sf, sg = apply_t(f), apply_t(g)
    for pair, a, b in zip(sf.pairs, sf.entries, sg.entries):
        if a > 0 and b == 0:
            return pair
    return None


def verify_pairwise_separation(n: int, t: int, family: Optional[Sequence[SetFunction]] = None) -> bool:
    """Todo par ordenado de miembros distintos de K tiene un par cercano separador."""
    if family is None:
        family = enumerate_two_layer(n, t)
    return all(
        separating_pair(f, g) is not None
        for f in family for g in family if f != g
    )


def two_layer_oracle(n: int, t: int, rays: Optional[Sequence[SetFunction]] = None) -> bool:
    """
    K coincide con los irreducibles del cono cuyas supermodularidades viven en {t, t+1}.

    Raises:
        GroundSetOutOfRange: si n está fuera de 3..5
    """
    check_ground_set(n, minimum=3, maximum=TWO_LAYER_ORACLE_MAX_N)
    if rays is None:
        rays = enumerate_irreducible_supermodular(n)
    allowed = {t, t + 1}
    expected = sorted((f for f in rays if set(layer_support(f)) <= allowed), key=SetFunction.key)
    family = enumerate_two_layer(n, t)
    if family != expected:
        logger.debug(f"[2LAYER] n={n} t={t}: K tiene {len(family)}, el cono {len(expected)}")
    return family == expected


def single_layer_members(n: int, rays: Sequence[SetFunction]) -> List[Tuple[int, SetFunction]]:
    """(t, f) para cada irreducible con supermodularidades en una sola capa."""
    out = []
    for f in rays:
        layers = layer_support(f)
        if len(layers) == 1:
            out.append((layers[0], f))
    return out


def verify_single_layer(n: int, rays: Sequence[SetFunction]) -> bool:
    """Los únicos irreducibles de una sola capa t son α_{n,t}."""
    found = single_layer_members(n, rays)
    return sorted(t for t, _ in found) == list(range(1, n)) and all(f == alpha(n, t) for t, f in found)
