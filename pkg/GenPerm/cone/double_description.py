"""
DoubleDescription - Enumeración exacta de rayos extremos

Convierte la representación H de un cono puntiagudo en su lista de rayos
extremos, agregando una desigualdad por paso:

1. Las ecuaciones se eliminan pasando a una base entera del núcleo.
2. Se eligen k desigualdades independientes; su cono simplicial da los rayos
   iniciales (columnas de la inversa).
3. Cada nueva desigualdad parte los rayos en R+, R0, R-. Los pares (p, q) de
   R+ x R- adyacentes generan (a·p) q - (a·q) p.

La adyacencia se prueba con el filtro de conteo |Z(p) ∩ Z(q)| >= k-2 y luego
con el rango módulo 2^61-1 de las filas ajustadas en común. Un rango modular
igual a k-2 certifica el rango exacto; si es menor, se recalcula el rango
exacto antes de descartar el par. Al final cada rayo se verifica con su
conjunto ajustado completo.

Orden de las desigualdades (ORDERS):

- 'min-pairs': primero la fila que genera menos pares candidatos |R+|·|R-|
  (se corta al encontrar 0). Pasado DD_DYNAMIC_ORDER_BUDGET se usa el índice.
- 'index': orden de entrada.

Todo es aritmética entera; la salida se ordena lexicográficamente, así que
no depende del orden de procesamiento ni del número de workers.
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import joblib
from tqdm import tqdm

from GenPerm.algebra import nullspace, rank, rank_mod_p, solve
from GenPerm.cone.cone import ConeH, Ray
from GenPerm.config import (
    DD_DYNAMIC_ORDER_BUDGET, DEFAULT_THREADS, MODULAR_PRIME, PARALLEL_MIN_PAIRS,
)
from GenPerm.errors import InvariantViolation, NotPointed
from GenPerm.utils import clear_denominators, popcount, primitive_int

logger = logging.getLogger('GenPerm.DoubleDescription')

# (vector en coordenadas reducidas, máscara de filas ajustadas)
_State = Tuple[List[int], int]

ORDERS = ('min-pairs', 'index')


def _bit_indices(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def combine_adjacent(plus, minus, rows, rows_mod, k: int, row_bit: int, prime: int):
    """
    Nuevos rayos para un bloque de R+ contra todo R-.

    plus / minus son listas de (vector, máscara ajustada, a·vector).
    Un par se descarta sólo si el rango exacto de las filas en común (rows)
    es menor que k-2; rows_mod filtra primero.
    Función de módulo para que joblib pueda enviarla a otros procesos.
    """
    need = k - 2
    out = []
    for vp, zp, ap in plus:
        for vq, zq, aq in minus:
            common = zp & zq
            if popcount(common) < need:
                continue
            if need > 0:
                common_rows = _bit_indices(common)
                if rank_mod_p([rows_mod[i] for i in common_rows], k, prime) < need:
                    if rank([rows[i] for i in common_rows]) < need:
                        continue
            w = primitive_int([ap * y - aq * x for x, y in zip(vp, vq)])
            out.append((w, common | row_bit))
    return out


class DoubleDescription:
    """
    Motor de doble descripción.

    Attributes:
        cone (ConeH): Cono a enumerar
        threads (int): Workers para las pruebas de adyacencia (joblib)
        order (str): 'min-pairs' (fila con menor |R+|·|R-|) o 'index'
        progress (bool): Barra de progreso tqdm en stderr
    """

    def __init__(self, cone: ConeH, threads: int = DEFAULT_THREADS,
                 order: str = 'min-pairs', progress: bool = False):
        if order not in ORDERS:
            raise ValueError(f"orden desconocido: {order!r} (opciones: {', '.join(ORDERS)})")
        self.cone = cone
        self.threads = max(1, int(threads))
        self.order = order
        self.progress = progress
        self.steps = 0
        self.max_intermediate = 0

    # --- preparación ---

    def _reduced_system(self) -> Tuple[List[List[int]], List[List[int]]]:
        """(filas A·N, base N del espacio de ecuaciones)."""
        dim = self.cone.dim
        if self.cone.equalities:
            basis = nullspace(self.cone.integer_equalities(), dim)
        else:
            basis = [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]
        rows = [[_dot(a, b) for b in basis] for a in self.cone.integer_inequalities()]
        rows = [primitive_int(r) for r in rows]
        return rows, basis

    def _initial_rows(self, rows: List[List[int]], k: int) -> List[int]:
        chosen: List[int] = []
        for idx, row in enumerate(rows):
            if rank([rows[c] for c in chosen] + [row]) > len(chosen):
                chosen.append(idx)
                if len(chosen) == k:
                    break
        return chosen

    def _initial_rays(self, rows: List[List[int]], chosen: List[int], k: int) -> List[_State]:
        block = [rows[c] for c in chosen]
        all_bits = 0
        for c in chosen:
            all_bits |= 1 << c
        rays = []
        for j, c in enumerate(chosen):
            unit = [1 if i == j else 0 for i in range(k)]
            column = solve(block, unit)
            ints, _ = clear_denominators(column)
            rays.append((primitive_int(ints), all_bits & ~(1 << c)))
        return rays

    def _next_row(self, rows, remaining: List[int], rays: List[_State]) -> int:
        """
        Heurística 'min-pairs': la fila pendiente con menor |R+|·|R-| (pares
        candidatos a combinar), empates por índice.
        """
        if self.order == 'index' or len(rays) * len(remaining) > DD_DYNAMIC_ORDER_BUDGET:
            return remaining[0]
        best, best_cost = remaining[0], None
        for idx in remaining:
            row = rows[idx]
            pos = neg = 0
            for v, _ in rays:
                value = _dot(row, v)
                if value > 0:
                    pos += 1
                elif value < 0:
                    neg += 1
            cost = pos * neg
            if best_cost is None or cost < best_cost:
                best, best_cost = idx, cost
                if cost == 0:
                    break
        return best

    # --- paso incremental ---

    def _combine(self, plus, minus, rows, rows_mod, k: int, row_bit: int):
        if self.threads > 1 and len(plus) * len(minus) >= PARALLEL_MIN_PAIRS and len(plus) > 1:
            size = -(-len(plus) // self.threads)
            chunks = [plus[i:i + size] for i in range(0, len(plus), size)]
            results = joblib.Parallel(n_jobs=self.threads)(
                joblib.delayed(combine_adjacent)(chunk, minus, rows, rows_mod, k, row_bit, MODULAR_PRIME)
                for chunk in chunks
            )
            return [item for part in results for item in part]
        return combine_adjacent(plus, minus, rows, rows_mod, k, row_bit, MODULAR_PRIME)

    def run(self) -> List[Ray]:
        """
        Rayos extremos del cono, ordenados lexicográficamente por dirección.

        Raises:
            NotPointed: si el cono contiene una recta (espacio de linealidad no trivial)
        """
        rows, basis = self._reduced_system()
        k = len(basis)
        if k == 0:
            logger.debug("[DD] el espacio de ecuaciones es {0}: sin rayos")
            return []
        row_rank = rank(rows) if rows else 0
        if row_rank < k:
            raise NotPointed(f"el cono no es puntiagudo: rango de desigualdades {row_rank} < {k}")
        rows_mod = [[v % MODULAR_PRIME for v in row] for row in rows]

        chosen = self._initial_rows(rows, k)
        rays = self._initial_rays(rows, chosen, k)
        taken = set(chosen)
        remaining = [i for i in range(len(rows)) if i not in taken]
        logger.debug(f"[DD] dim={self.cone.dim} k={k} filas={len(rows)} iniciales={len(rays)}")

        bar = tqdm(total=len(remaining), desc="[DD]", disable=not self.progress, leave=False)
        try:
            while remaining:
                idx = self._next_row(rows, remaining, rays)
                remaining.remove(idx)
                row, row_bit = rows[idx], 1 << idx
                plus, zero, minus = [], [], []
                for v, z in rays:
                    value = _dot(row, v)
                    if value > 0:
                        plus.append((v, z, value))
                    elif value < 0:
                        minus.append((v, z, value))
                    else:
                        zero.append((v, z | row_bit))
                new = self._combine(plus, minus, rows, rows_mod, k, row_bit) if k >= 2 else []
                rays = [(v, z) for v, z, _ in plus] + zero + new
                self.steps += 1
                self.max_intermediate = max(self.max_intermediate, len(rays))
                logger.debug(
                    f"[DD] fila {idx}: +{len(plus)} 0:{len(zero)} -{len(minus)} nuevos={len(new)} total={len(rays)}"
                )
                bar.update(1)
                bar.set_postfix(rays=len(rays))
        finally:
            bar.close()

        return self._finalize(rays, rows, basis, k)

    # --- verificación y salida ---

    def _finalize(self, rays: List[_State], rows, basis, k: int) -> List[Ray]:
        original = self.cone.integer_inequalities()
        equalities = self.cone.integer_equalities()
        result = {}
        for y, _ in rays:
            x = primitive_int([sum(y[j] * basis[j][c] for j in range(k)) for c in range(self.cone.dim)])
            values = [_dot(a, x) for a in original]
            if any(v < 0 for v in values) or any(_dot(e, x) != 0 for e in equalities):
                raise InvariantViolation(f"[DD] rayo fuera del cono: {x}")
            tight = frozenset(i for i, v in enumerate(values) if v == 0)
            self._verify_extreme(rows, tight, k, x)
            result[tuple(x)] = Ray(tuple(x), tight)
        ordered = [result[key] for key in sorted(result)]
        logger.debug(f"[DD] {len(ordered)} rayos extremos (máximo intermedio {self.max_intermediate})")
        return ordered

    def _verify_extreme(self, rows, tight, k: int, x) -> None:
        need = k - 1
        if need == 0:
            return
        sub = [rows[i] for i in sorted(tight)]
        if len(sub) >= need and rank_mod_p(sub, k) == need:
            return
        if not sub or rank(sub) != need:
            raise InvariantViolation(f"[DD] el rayo {x} no es extremo (rango ajustado != {need})")


def extreme_rays(cone: ConeH, threads: int = DEFAULT_THREADS, order: str = 'min-pairs',
                 progress: bool = False) -> List[Ray]:
    """Atajo funcional sobre DoubleDescription(...).run()."""
    return DoubleDescription(cone, threads=threads, order=order, progress=progress).run()


def brute_force_rays(cone: ConeH, max_subsets: Optional[int] = None) -> List[Ray]:
    """
    Oráculo: rayos por elección exhaustiva de k-1 desigualdades independientes.

    Solo para conos chicos (combinatoria C(m, k-1)).
    """
    engine = DoubleDescription(cone, order='index')
    rows, basis = engine._reduced_system()
    k = len(basis)
    if k == 0:
        return []
    if not rows or rank(rows) < k:
        raise NotPointed("el cono no es puntiagudo")
    found = {}
    for count, subset in enumerate(combinations(range(len(rows)), k - 1)):
        if max_subsets is not None and count >= max_subsets:
            break
        sub = [rows[i] for i in subset]
        if k > 1 and rank(sub) != k - 1:
            continue
        kernel = nullspace(sub, k) if k > 1 else [[1]]
        if len(kernel) != 1:
            continue
        for sign in (1, -1):
            y = [sign * v for v in kernel[0]]
            if all(_dot(r, y) >= 0 for r in rows):
                found[tuple(y)] = y
    states = [(y, 0) for y in found.values()]
    return engine._finalize(states, rows, basis, k)
