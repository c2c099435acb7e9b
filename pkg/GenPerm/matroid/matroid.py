"""
Matroid - Matroides dados por su lista de bases

- Validación del axioma de intercambio
- rank(I) = max_B |I ∩ B|, nullity(I) = |I| - rank(I)
- Loops, coloops, reducibilidad (suma directa) y constructores
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from GenPerm.core.subsets import (
    canonical_key, canonical_subsets, check_ground_set, elements_of, format_set, full_mask,
    subsets_of_size,
)
from GenPerm.errors import ElementOutOfRange, InvalidMatroid
from GenPerm.utils import popcount


def check_exchange(bases: Sequence[int]) -> bool:
    """
    Axioma de intercambio: para A, B bases y a ∈ A \\ B existe b ∈ B \\ A con A - a + b base.

    Supone una colección no vacía de máscaras del mismo tamaño.
    """
    family = set(bases)
    for A in family:
        for B in family:
            rest = A & ~B
            while rest:
                a = rest & -rest
                rest ^= a
                options = B & ~A
                found = False
                while options:
                    b = options & -options
                    options ^= b
                    if (A ^ a) | b in family:
                        found = True
                        break
                if not found:
                    return False
    return True


@dataclass(frozen=True)
class Matroid:
    """
    Matroide sobre [n].

    Attributes:
        n (int): Tamaño del conjunto base
        bases (Tuple[int, ...]): Máscaras de las bases, sin repetir, en orden canónico
    """
    n: int
    bases: Tuple[int, ...]

    def __post_init__(self):
        check_ground_set(self.n)
        bases = sorted(set(self.bases), key=canonical_key)
        if not bases:
            raise InvalidMatroid("un matroide necesita al menos una base")
        for b in bases:
            if b < 0 or b > full_mask(self.n):
                raise ElementOutOfRange(f"base {b} fuera de [{self.n}]")
        sizes = {popcount(b) for b in bases}
        if len(sizes) != 1:
            raise InvalidMatroid(f"bases de tamaños distintos: {sorted(sizes)}")
        if not check_exchange(bases):
            raise InvalidMatroid("las bases no cumplen el axioma de intercambio")
        object.__setattr__(self, 'bases', tuple(bases))

    @property
    def r(self) -> int:
        """Rango del matroide (tamaño común de las bases)."""
        return popcount(self.bases[0])

    def rank(self, mask: int) -> int:
        return max(popcount(mask & b) for b in self.bases)

    def nullity(self, mask: int) -> int:
        return popcount(mask) - self.rank(mask)

    def loops(self) -> Tuple[int, ...]:
        union = 0
        for b in self.bases:
            union |= b
        return tuple(elements_of(full_mask(self.n) & ~union))

    def coloops(self) -> Tuple[int, ...]:
        common = full_mask(self.n)
        for b in self.bases:
            common &= b
        return tuple(elements_of(common))

    def is_loopless(self) -> bool:
        return not self.loops()

    def key(self) -> Tuple:
        return (self.r, len(self.bases), tuple(canonical_key(b) for b in self.bases))

    def __str__(self) -> str:
        return f"Matroid(n={self.n}, r={self.r}; " + ", ".join(format_set(b) for b in self.bases) + ")"


def _compress(mask: int, keep: int) -> int:
    """Reindexa los bits de `mask` que están en `keep` a posiciones consecutivas."""
    out = 0
    position = 0
    for i in range(keep.bit_length()):
        if keep >> i & 1:
            if mask >> i & 1:
                out |= 1 << position
            position += 1
    return out


def restrict_bases(M: Matroid, keep: int) -> Tuple[int, ...]:
    """Bases proyectadas sobre `keep` y reindexadas (sin validar)."""
    return tuple(_compress(b & keep, keep) for b in M.bases)


def is_reducible_matroid(M: Matroid) -> Optional[Tuple[int, int]]:
    """
    Partición (E_1, E_2) con bases = {B_1 ∪ B_2}, o None si M es irreducible.

    Recorre E_1 en orden canónico; descarta primero por
    rank(E_1) + rank(E_2) = rank(E) y después verifica la forma de producto.
    """
    if M.n < 2:
        return None
    full = full_mask(M.n)
    bases = set(M.bases)
    for E1 in canonical_subsets(M.n)[1:-1]:
        E2 = full & ~E1
        if M.rank(E1) + M.rank(E2) != M.r:
            continue
        left = {b & E1 for b in bases}
        right = {b & E2 for b in bases}
        if len(left) * len(right) == len(bases) and all(x | y in bases for x in left for y in right):
            return E1, E2
    return None


def delete_coloops(M: Matroid) -> Matroid:
    """M sin sus coloops, con el conjunto base reindexado."""
    keep = full_mask(M.n)
    for c in M.coloops():
        keep &= ~(1 << (c - 1))
    return Matroid(popcount(keep), restrict_bases(M, keep))


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: todas las r-partes de [n]."""
    check_ground_set(n)
    if not 0 <= r <= n:
        raise InvalidMatroid(f"rango {r} fuera de 0..{n}")
    return Matroid(n, subsets_of_size(n, r))


def free(n: int) -> Matroid:
    """Matroide libre: la única base es [n]."""
    check_ground_set(n)
    return Matroid(n, (full_mask(n),))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """M1 sobre {1..n1} y M2 desplazado a {n1+1..n1+n2}."""
    return Matroid(M1.n + M2.n, tuple(a | (b << M1.n) for a in M1.bases for b in M2.bases))
