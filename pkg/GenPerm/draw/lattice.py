"""
GenPerm.draw.lattice

Diagrama de Hasse del retículo booleano 2^[n] (n <= 4) con los valores de f.
Cada par cercano se marca con una cuerda entre I y J: en SVG_STRICT_COLOR si
s_{I,J} > 0 (o < 0, punteada) y en SVG_MODULAR_COLOR si s_{I,J} = 0.
"""

from typing import Dict, Tuple

from GenPerm.config import (
    SVG_FILL_COLOR, SVG_FONT_SIZE, SVG_MARGIN, SVG_MODULAR_COLOR, SVG_NODE_RADIUS,
    SVG_STRICT_COLOR, SVG_STROKE_COLOR, SVG_TEXT_COLOR,
)
from GenPerm.core.checks import iter_supermodularity
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import bit, canonical_subsets, format_set
from GenPerm.utils import popcount


def lattice_positions(n: int, canvas_width: int, canvas_height: int) -> Dict[int, Tuple[float, float]]:
    """
    Posición de cada subconjunto: una fila por cardinalidad (∅ abajo, [n]
    arriba), en orden canónico dentro de la fila.
    """
    rows: Dict[int, list] = {}
    for mask in canonical_subsets(n):
        rows.setdefault(popcount(mask), []).append(mask)

    usable_h = canvas_height - 2 * SVG_MARGIN
    usable_w = canvas_width - 2 * SVG_MARGIN
    positions = {}
    for size, masks in rows.items():
        y = canvas_height - SVG_MARGIN - (usable_h * size / n if n else 0)
        step = usable_w / (len(masks) + 1)
        for k, mask in enumerate(masks, 1):
            positions[mask] = (SVG_MARGIN + step * k, y)
    return positions


def draw_boolean_lattice(dwg, f: SetFunction, canvas_width: int, canvas_height: int) -> Tuple[int, int]:
    """
    Dibuja aristas de cobertura, cuerdas de pares cercanos y nodos.

    Returns:
        (int, int): Pares cercanos no modulares y modulares
    """
    n = f.n
    pos = lattice_positions(n, canvas_width, canvas_height)

    edges = dwg.g(id='hasse-edges', stroke='#999999', stroke_width=1)
    for mask in canonical_subsets(n):
        for e in range(1, n + 1):
            if not mask & bit(e):
                edges.add(dwg.line(start=pos[mask], end=pos[mask | bit(e)]))
    dwg.add(edges)

    strict, flat = 0, 0
    chords = dwg.g(id='close-pairs', fill='none')
    for pair, value in iter_supermodularity(f):
        attrs = {'stroke_width': 2}
        if value == 0:
            flat += 1
            attrs['stroke'] = SVG_MODULAR_COLOR
            attrs['stroke_dasharray'] = '2,3'
        else:
            strict += 1
            attrs['stroke'] = SVG_STRICT_COLOR
            if value < 0:
                attrs['stroke_dasharray'] = '6,3'
        chords.add(dwg.line(start=pos[pair.left], end=pos[pair.right], **attrs))
    dwg.add(chords)

    nodes = dwg.g(id='subsets')
    for mask in canonical_subsets(n):
        x, y = pos[mask]
        nodes.add(dwg.circle(center=(x, y), r=SVG_NODE_RADIUS, fill=SVG_FILL_COLOR,
                             stroke=SVG_STROKE_COLOR, stroke_width=1.5))
        nodes.add(dwg.text(
            format_set(mask),
            insert=(x, y + 4),
            text_anchor='middle',
            font_size=f"{SVG_FONT_SIZE - 2}px",
            font_family="Arial, monospace",
            fill=SVG_TEXT_COLOR
        ))
        nodes.add(dwg.text(
            str(f(mask)),
            insert=(x, y - SVG_NODE_RADIUS - 4),
            text_anchor='middle',
            font_size=f"{SVG_FONT_SIZE}px",
            font_family="Arial, monospace",
            fill=SVG_STRICT_COLOR,
            font_weight="bold"
        ))
    dwg.add(nodes)
    return strict, flat
