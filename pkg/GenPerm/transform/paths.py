"""
Sumas de camino y pesos de color

Cada permutación σ de [n] induce una cadena de n-1 pares cercanos
I_r = {σ_1..σ_r}, J_r = {σ_2..σ_{r+1}}. La suma de s a lo largo de la cadena
depende solo del color σ_1 cuando s está en la imagen de T.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, Sequence, Tuple

from GenPerm.config import PATH_SUM_MAX_N
from GenPerm.core.checks import is_modular, require_supermodular
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import ClosePair, bit, check_ground_set, full_mask, make_close_pair
from GenPerm.errors import ModularInput, NotAPermutation
from GenPerm.transform.supermodularity import SupermodularityVector, apply_t
from GenPerm.utils import primitive


@dataclass(frozen=True)
class PathChain:
    """
    Cadena de pares cercanos inducida por una permutación.

    Attributes:
        sigma (Tuple[int, ...]): Permutación de [n] (1-based)
        pairs (Tuple[ClosePair, ...]): Los n-1 pares (I_r, J_r)
        color (int): σ_1
    """
    sigma: Tuple[int, ...]
    pairs: Tuple[ClosePair, ...]
    color: int


@dataclass(frozen=True)
class ColorWeights:
    """m_i = f([n]) + f(∅) - f({i}) - f([n] \\ {i}), uno por elemento."""
    m: Tuple[Fraction, ...]

    def __getitem__(self, element: int) -> Fraction:
        return self.m[element - 1]

    @property
    def maximum(self) -> Fraction:
        return max(self.m)


def _check_permutation(sigma: Sequence[int], n: int = None) -> Tuple[int, ...]:
    sigma = tuple(sigma)
    size = len(sigma) if n is None else n
    if sorted(sigma) != list(range(1, size + 1)) or len(sigma) != size:
        raise NotAPermutation(f"{list(sigma)} no es una permutación de [1..{size}]")
    if size < 2:
        raise NotAPermutation(f"una cadena necesita al menos dos elementos: {list(sigma)}")
    return sigma


def path_chain(sigma: Sequence[int]) -> PathChain:
    """
    Los n-1 pares cercanos (I_r, J_r) de la permutación.

    Raises:
        NotAPermutation: si sigma no es una permutación de [n]
    """
    sigma = _check_permutation(sigma)
    pairs = []
    meet = 0
    for r in range(1, len(sigma)):
        pairs.append(make_close_pair(meet, sigma[0], sigma[r]))
        meet |= bit(sigma[r])
    return PathChain(sigma, tuple(pairs), sigma[0])


def path_sum(s: SupermodularityVector, sigma: Sequence[int]) -> Fraction:
    """P_σ(s): suma de s sobre la cadena de σ."""
    chain = path_chain(_check_permutation(sigma, s.n))
    return sum((s[pair] for pair in chain.pairs), Fraction(0))


def color_weights(f: SetFunction) -> ColorWeights:
    everything = full_mask(f.n)
    return ColorWeights(tuple(
        f(everything) + f(0) - f(bit(i)) - f(everything & ~bit(i))
        for i in range(1, f.n + 1)
    ))


def path_sums_by_color(s: SupermodularityVector) -> Dict[int, set]:
    """Color -> conjunto de valores de P_σ(s) sobre todas las σ de ese color."""
    check_ground_set(s.n, minimum=2, maximum=PATH_SUM_MAX_N)
    sums: Dict[int, set] = {i: set() for i in range(1, s.n + 1)}
    for sigma in permutations(range(1, s.n + 1)):
        sums[sigma[0]].add(path_sum(s, sigma))
    return sums


def satisfies_path_sum_condition(s: SupermodularityVector) -> bool:
    """Todas las sumas de camino de un mismo color coinciden."""
    return all(len(values) == 1 for values in path_sums_by_color(s).values())


def complexity_of(f: SetFunction) -> int:
    """
    Complejidad de f: máximo peso de color de T f escalado a enteros coprimos.

    Raises:
        NotSupermodular: si f no es supermodular
        ModularInput: si T f = 0
    """
    require_supermodular(f)
    if is_modular(f):
        raise ModularInput("una función modular no tiene forma primitiva")
    _, scale = primitive(apply_t(f).entries)
    return int(color_weights(f).maximum * scale)
