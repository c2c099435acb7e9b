"""
Álgebra lineal exacta sobre Q y sobre Z/pZ

Eliminación gaussiana con Fraction (forma escalonada reducida), rango entero
libre de fracciones, rango módulo un primo (filtro rápido del motor de conos),
base entera del núcleo y determinante de Bareiss.

Ninguna función modifica sus argumentos.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from GenPerm.config import MODULAR_PRIME
from GenPerm.utils import Rational, clear_denominators, primitive_int

Matrix = Sequence[Sequence[Rational]]


def _integer_rows(matrix: Matrix) -> List[List[int]]:
    """Escala cada fila a enteros (no cambia rango ni núcleo)."""
    rows = []
    for row in matrix:
        ints, _ = clear_denominators(row)
        rows.append(ints)
    return rows


def row_echelon(matrix: Matrix, ncols: Optional[int] = None) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Forma escalonada reducida por filas sobre Q.

    Args:
        matrix: Filas de racionales
        ncols: Cantidad de columnas (necesario si la matriz no tiene filas)

    Returns:
        tuple: (filas no nulas de la RREF, columnas pivote)
    """
    m = [[Fraction(v) for v in row] for row in matrix]
    width = ncols if ncols is not None else (len(m[0]) if m else 0)
    pivots = []
    piv_r = 0
    for piv_c in range(width):
        for i_row in range(piv_r, len(m)):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        m[piv_r] = [v / fp for v in m[piv_r]]
        for r in range(len(m)):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if fr == 0:
                continue
            m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == len(m):
            break
    return m[:piv_r], pivots


def rank(matrix: Matrix) -> int:
    """Rango exacto con eliminación entera (reducción por mcd en cada fila)."""
    rows = [r for r in _integer_rows(matrix) if any(r)]
    if not rows:
        return 0
    width = len(rows[0])
    result = 0
    for col in range(width):
        pivot = next((i for i in range(result, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[result], rows[pivot] = rows[pivot], rows[result]
        p_row = rows[result]
        p = p_row[col]
        for i in range(result + 1, len(rows)):
            c = rows[i][col]
            if c == 0:
                continue
            rows[i] = primitive_int([p * a - c * b for a, b in zip(rows[i], p_row)])
        result += 1
        if result == len(rows):
            break
    return result


def rank_mod_p(rows: Sequence[Sequence[int]], width: int, p: int = MODULAR_PRIME) -> int:
    """
    Rango de una matriz entera módulo p.

    Es una cota inferior del rango sobre Q: si coincide con el máximo
    posible, el rango exacto queda certificado.
    """
    m = [[v % p for v in row] for row in rows]
    result = 0
    for col in range(width):
        pivot = None
        for i in range(result, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[result], m[pivot] = m[pivot], m[result]
        p_row = m[result]
        inv = pow(p_row[col], p - 2, p)
        for i in range(result + 1, len(m)):
            c = m[i][col]
            if c:
                factor = c * inv % p
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], p_row)]
        result += 1
        if result == len(m):
            break
    return result


def nullspace(matrix: Matrix, ncols: int) -> List[List[int]]:
    """
    Base entera del núcleo {x : A x = 0}.

    Cada vector es primitivo y tiene un 1 en su columna libre, así que la
    base es determinista.
    """
    reduced, pivots = row_echelon(matrix, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[fc]
        ints, _ = clear_denominators(vec)
        basis.append(primitive_int(ints))
    return basis


def determinant(matrix: Matrix) -> Fraction:
    """Determinante exacto por Bareiss (fracciones limpiadas fila a fila)."""
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in matrix:
        ints, factor = clear_denominators(row)
        m.append(ints)
        scale *= factor
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[size - 1][size - 1]) / scale


def int_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinante de una matriz entera (sin pasar por Fraction)."""
    return int(determinant(matrix))


def solve(matrix: Matrix, rhs: Sequence[Rational]) -> Optional[List[Fraction]]:
    """
    Una solución de A x = b (variables libres en 0), o None si es inconsistente.
    """
    ncols = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = row_echelon(augmented, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[ncols]
    return x


def transpose(matrix: Matrix) -> List[List[Rational]]:
    return [list(col) for col in zip(*matrix)]
