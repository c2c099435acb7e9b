#!/usr/bin/env python3
"""
generate_rays.py - Regenera las tablas de irreducibles de docs/rays/

Escribe rays{n}.jsonl (representantes estándar, orden canónico) para cada n
pedido y, para n = 3, un SVG por irreducible con su permutoedro generalizado.

Uso:
    python scripts/generate_rays.py             # n = 3 y 4
    python scripts/generate_rays.py --n 3 4 5   # n = 5 tarda horas
    python scripts/generate_rays.py --threads 4
"""

import sys
import argparse
from pathlib import Path

# Agregar GenPerm al path para poder importar
sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm.cone import enumerate_irreducible_supermodular
from GenPerm.debug import configure_logging
from GenPerm.draw import render_svg
from GenPerm.formats import write_jsonl
from GenPerm.transform import complexity_of


def main():
    parser = argparse.ArgumentParser(description="Regenera docs/rays/ con los irreducibles")
    parser.add_argument("--n", nargs='+', type=int, default=[3, 4], metavar='N',
                        help="Tamaños a enumerar (default: 3 4)")
    parser.add_argument("--threads", type=int, default=1, help="Workers de la doble descripción")
    parser.add_argument("--debug", action="store_true", help="Logs detallados")
    args = parser.parse_args()

    configure_logging(args.debug)
    out_dir = Path(__file__).parent.parent / "docs" / "rays"
    out_dir.mkdir(parents=True, exist_ok=True)

    for n in args.n:
        rays = enumerate_irreducible_supermodular(n, threads=args.threads, progress=n >= 5)
        path = out_dir / f"rays{n}.jsonl"
        with open(path, 'w', encoding='utf-8') as fh:
            write_jsonl(fh, rays)
        top = max(complexity_of(f) for f in rays)
        print(f"[OK] n={n}: {len(rays)} irreducibles, complejidad máxima {top} -> {path}")
        if n == 3:
            for idx, f in enumerate(rays):
                svg = out_dir / f"ray3_{idx}.svg"
                render_svg(f, str(svg), kind='polytope')
                print(f"[OK]   {svg.name}")


if __name__ == "__main__":
    main()
