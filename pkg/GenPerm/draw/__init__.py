from .canvas import DRAW_KINDS, create_canvas, render_svg, resolve_kind
from .lattice import draw_boolean_lattice, lattice_positions
from .polytope import draw_gp_polygon, polygon_vertices

__all__ = [
    "DRAW_KINDS", "create_canvas", "render_svg", "resolve_kind",
    "draw_boolean_lattice", "lattice_positions",
    "draw_gp_polygon", "polygon_vertices",
]
