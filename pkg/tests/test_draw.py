#!/usr/bin/env python3
"""
Tests de la salida SVG: polígono del permutoedro generalizado (n = 3) y
retículo booleano con los pares cercanos.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm.core import SetFunction, permutohedron_from_point
from GenPerm.draw import lattice_positions, polygon_vertices, render_svg, resolve_kind
from GenPerm.errors import FormatError, GroundSetOutOfRange
from GenPerm.twolayer import alpha, beta


def test_polygon_vertex_counts():
    """Hexágono, triángulo y segmento."""
    assert len(polygon_vertices(permutohedron_from_point([0, 1, 2]))) == 6
    assert len(polygon_vertices(alpha(3, 1))) == 3
    assert len(polygon_vertices(beta(3, 1, 3))) == 2


def test_polygon_ignores_value_at_empty_set():
    assert polygon_vertices(alpha(3, 2).shift(7)) == polygon_vertices(alpha(3, 2))


def test_lattice_rows():
    pos = lattice_positions(3, 640, 560)
    assert len(pos) == 8
    assert pos[0][1] == 500
    assert pos[0b111][1] == 60
    assert pos[0b001][1] == pos[0b010][1] == pos[0b100][1]


def test_resolve_kind():
    assert resolve_kind(alpha(3, 1)) == 'polytope'
    assert resolve_kind(alpha(4, 1)) == 'lattice'
    assert resolve_kind(alpha(3, 1), 'lattice') == 'lattice'
    with pytest.raises(FormatError):
        resolve_kind(alpha(3, 1), 'hexagon')
    with pytest.raises(GroundSetOutOfRange):
        resolve_kind(alpha(4, 1), 'polytope')
    with pytest.raises(GroundSetOutOfRange):
        resolve_kind(alpha(5, 1))


def test_render_polygon(tmp_path):
    output = tmp_path / "svg" / "alpha31.svg"
    assert render_svg(alpha(3, 1), str(output)) == 'polytope'
    content = output.read_text(encoding='utf-8')
    assert content.startswith('<?xml')
    assert 'gp-polygon' in content
    assert '<polygon' in content


def test_render_lattice_with_badge(tmp_path):
    output = tmp_path / "lattice.svg"
    f = alpha(4, 2) - SetFunction.by_cardinality(4, lambda k: 1 if k == 4 else 0)
    assert render_svg(f, str(output), badge=True) == 'lattice'
    content = output.read_text(encoding='utf-8')
    assert 'close-pairs' in content
    assert 'stroke-dasharray="6,3"' in content
    assert 'GenPerm v' in content
    assert 'n=4 lattice' in content
