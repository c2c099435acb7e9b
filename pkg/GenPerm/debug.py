"""
Utilidades de depuración para GenPerm.

- Versión del paquete (metadatos instalados)
- Configuración de logging para el CLI (--debug)
- Badge de depuración en los SVG generados por `draw`
"""

import logging
import sys
from datetime import datetime

logger = logging.getLogger('GenPerm')

LOG_FORMAT = '[%(levelname)s] %(name)s: %(message)s'


def get_genperm_version() -> str:
    """
    Obtiene la versión de GenPerm desde los metadatos del paquete.

    Returns:
        str: Versión (ej: "1.0.0")
    """
    try:
        from importlib.metadata import PackageNotFoundError, version
        try:
            return version("GenPerm")
        except PackageNotFoundError:
            return "1.0.0"
    except ImportError:
        # Fallback si no se puede obtener desde metadata
        return "1.0.0"


def configure_logging(debug: bool = False) -> None:
    """
    Logs a stderr; stdout queda libre para datos y resúmenes.

    Args:
        debug: DEBUG con nombre de logger si True, INFO si no
    """
    level = logging.DEBUG if debug else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
    logger.setLevel(level)
    if debug:
        logger.debug("=" * 70)
        logger.debug("MODO DEBUG ACTIVADO")
        logger.debug("=" * 70)


def add_debug_badge(dwg, canvas_width: int, label: str = "") -> None:
    """
    Agrega un badge en la esquina superior derecha del SVG con la fecha
    de generación, la versión y una etiqueta opcional (p. ej. "n=3").

    Args:
        dwg: Objeto svgwrite.Drawing
        canvas_width: Ancho del canvas en píxeles
        label: Texto extra para la tercera línea
    """
    badge_width = 200
    badge_height = 60 if not label else 76
    badge_x = canvas_width - badge_width - 10
    badge_y = 10

    dwg.add(dwg.rect(
        insert=(badge_x, badge_y),
        size=(badge_width, badge_height),
        fill='#B0C4DE',
        fill_opacity=0.9,
        stroke='#4682B4',
        stroke_width=2,
        rx=5,
        ry=5
    ))

    lines = [
        f"Generado: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}",
        f"GenPerm v{get_genperm_version()}",
    ]
    if label:
        lines.append(label)
    for k, text in enumerate(lines):
        dwg.add(dwg.text(
            text,
            insert=(badge_x + 10, badge_y + 22 + 18 * k),
            font_size="11px",
            font_family="Arial, monospace",
            fill="#001F3F",
            font_weight="bold"
        ))
