"""
GenPerm.draw.polytope

Polígono del permutoedro generalizado de una función supermodular con n = 3.

Los vértices viven en el plano x1 + x2 + x3 = f([3]); se proyectan con
(u, v) = (√3/2 · (x2 - x1), x3 - (x1 + x2)/2), que conserva las formas
(el permutoedro regular sale hexágono, α_{3,1} y α_{3,2} triángulos
equiláteros y las elevaciones segmentos).
"""

import math
from typing import List, Sequence, Tuple

from GenPerm.config import (
    SVG_FILL_COLOR, SVG_FONT_SIZE, SVG_STROKE_COLOR, SVG_TEXT_COLOR,
)
from GenPerm.core.polytope import gp_vertices
from GenPerm.core.setfunction import SetFunction
from GenPerm.draw.canvas import fit_to_canvas


def project_point(x: Sequence) -> Tuple[float, float]:
    x1, x2, x3 = (float(v) for v in x)
    return (math.sqrt(3) / 2 * (x2 - x1), x3 - (x1 + x2) / 2)


def polygon_vertices(f: SetFunction) -> List[tuple]:
    """
    Vértices del GP de f (con f(∅) llevado a 0) en orden angular alrededor
    del centroide, listos para un <polygon>.
    """
    vertices = gp_vertices(f.shift(-f(0)))
    if len(vertices) < 3:
        return vertices
    projected = [project_point(v) for v in vertices]
    cx = sum(p[0] for p in projected) / len(projected)
    cy = sum(p[1] for p in projected) / len(projected)
    order = sorted(range(len(vertices)), key=lambda k: math.atan2(projected[k][1] - cy, projected[k][0] - cx))
    return [vertices[k] for k in order]


def draw_gp_polygon(dwg, f: SetFunction, canvas_width: int, canvas_height: int) -> int:
    """
    Dibuja el polígono (o segmento, o punto) con cada vértice etiquetado.

    Returns:
        int: Número de vértices
    """
    vertices = polygon_vertices(f)
    points = fit_to_canvas([project_point(v) for v in vertices], canvas_width, canvas_height)

    g = dwg.g(id='gp-polygon')
    if len(points) >= 3:
        g.add(dwg.polygon(points=points, fill=SVG_FILL_COLOR, stroke=SVG_STROKE_COLOR, stroke_width=2))
    elif len(points) == 2:
        g.add(dwg.line(start=points[0], end=points[1], stroke=SVG_STROKE_COLOR, stroke_width=3))

    for (px, py), vertex in zip(points, vertices):
        g.add(dwg.circle(center=(px, py), r=4, fill=SVG_STROKE_COLOR))
        label = "(" + ", ".join(str(c) for c in vertex) + ")"
        g.add(dwg.text(
            label,
            insert=(px + 8, py - 8),
            font_size=f"{SVG_FONT_SIZE}px",
            font_family="Arial, monospace",
            fill=SVG_TEXT_COLOR
        ))
    dwg.add(g)
    return len(vertices)
