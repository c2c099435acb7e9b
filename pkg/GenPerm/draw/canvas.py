"""
GenPerm.draw.canvas

Creación del Drawing SVG y punto de entrada `render_svg`, que elige entre el
polígono del permutoedro generalizado (n = 3) y el retículo booleano (n <= 4).
"""

import logging
import os
from typing import List, Sequence, Tuple

import svgwrite

from GenPerm.config import (
    DRAW_LATTICE_MAX_N, DRAW_POLYTOPE_N, SVG_HEIGHT, SVG_MARGIN, SVG_WIDTH,
)
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import check_ground_set
from GenPerm.debug import add_debug_badge
from GenPerm.errors import FormatError

logger = logging.getLogger('GenPerm')

DRAW_KINDS = ('auto', 'polytope', 'lattice')


def create_canvas(output_path: str, canvas_width: int = SVG_WIDTH, canvas_height: int = SVG_HEIGHT):
    """Drawing SVG con viewbox y fondo blanco."""
    dwg = svgwrite.Drawing(output_path, size=(canvas_width, canvas_height), debug=False)
    dwg.viewbox(0, 0, canvas_width, canvas_height)
    dwg.add(dwg.rect(insert=(0, 0), size=(canvas_width, canvas_height), fill='white'))
    return dwg


def fit_to_canvas(points: Sequence[Tuple[float, float]], canvas_width: int, canvas_height: int,
                  margin: int = SVG_MARGIN) -> List[Tuple[float, float]]:
    """
    Escala y centra puntos del plano (y hacia arriba) al canvas SVG (y hacia abajo).

    Un solo punto, o todos iguales, queda en el centro.
    """
    if not points:
        return []
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span_x, span_y = max(xs) - min(xs), max(ys) - min(ys)
    usable_w, usable_h = canvas_width - 2 * margin, canvas_height - 2 * margin
    candidates = [usable_w / span_x if span_x else None, usable_h / span_y if span_y else None]
    candidates = [c for c in candidates if c is not None]
    scale = min(candidates) if candidates else 1.0
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
    return [
        (canvas_width / 2 + (x - cx) * scale, canvas_height / 2 - (y - cy) * scale)
        for x, y in points
    ]


def resolve_kind(f: SetFunction, kind: str = 'auto') -> str:
    """'auto' elige el polígono para n = 3 y el retículo en otro caso."""
    if kind not in DRAW_KINDS:
        raise FormatError(f"tipo de dibujo desconocido: {kind!r} (opciones: {', '.join(DRAW_KINDS)})")
    if kind == 'auto':
        kind = 'polytope' if f.n == DRAW_POLYTOPE_N else 'lattice'
    if kind == 'polytope':
        check_ground_set(f.n, minimum=DRAW_POLYTOPE_N, maximum=DRAW_POLYTOPE_N)
    else:
        check_ground_set(f.n, minimum=1, maximum=DRAW_LATTICE_MAX_N)
    return kind


def render_svg(f: SetFunction, output_path: str, kind: str = 'auto', badge: bool = False) -> str:
    """
    Dibuja f y guarda el SVG.

    Args:
        f: Función de conjunto (supermodular para el polígono)
        output_path: Ruta del .svg
        kind: 'auto', 'polytope' o 'lattice'
        badge: Agrega el badge de depuración

    Returns:
        str: El tipo de dibujo efectivamente generado

    Raises:
        GroundSetOutOfRange: si n no es 3 (polígono) o n > 4 (retículo)
        NotSupermodular: si se pide el polígono de una función no supermodular
    """
    from GenPerm.draw.lattice import draw_boolean_lattice
    from GenPerm.draw.polytope import draw_gp_polygon

    kind = resolve_kind(f, kind)
    dwg = create_canvas(output_path)
    if kind == 'polytope':
        count = draw_gp_polygon(dwg, f, SVG_WIDTH, SVG_HEIGHT)
        logger.debug(f"[SVG] polígono con {count} vértices")
    else:
        strict, flat = draw_boolean_lattice(dwg, f, SVG_WIDTH, SVG_HEIGHT)
        logger.debug(f"[SVG] retículo n={f.n}: {strict} pares estrictos, {flat} modulares")
    if badge:
        add_debug_badge(dwg, SVG_WIDTH, label=f"n={f.n} {kind}")

    output_dir = os.path.dirname(output_path)
    if output_dir and not os.path.exists(output_dir):
        os.makedirs(output_dir, exist_ok=True)
    dwg.save()
    logger.info(f"SVG generado: {output_path}")
    return kind
