#!/usr/bin/env python3
"""
run_tests.py - Ejecuta la batería de invariantes embebida de GenPerm

Recorre los chequeos de GenPerm.selftest (cantidades de rayos, ida y vuelta,
identidades exactas) y muestra un reporte PASS/FAIL con tiempos.

Uso:
    python scripts/run_tests.py
    python scripts/run_tests.py --verbose   # Muestra el detalle de cada falla
    python scripts/run_tests.py --big       # Incluye n = 5 (varios minutos)
"""

import sys
import argparse
import logging
from pathlib import Path

# Agregar GenPerm al path para poder importar
sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm.debug import configure_logging
from GenPerm.selftest import run_self_test


def main():
    parser = argparse.ArgumentParser(
        description="Ejecuta la batería de invariantes de GenPerm"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Modo verbose (muestra el detalle de cada falla y los logs)"
    )
    parser.add_argument(
        "--big",
        action="store_true",
        help="Incluye los chequeos de n = 5"
    )
    args = parser.parse_args()

    configure_logging(debug=args.verbose)
    if not args.verbose:
        logging.getLogger('GenPerm').setLevel(logging.WARNING)

    print("[TEST] Ejecutando la batería de invariantes\n")
    print("=" * 70)

    results = run_self_test(include_big=args.big)
    errors = []
    for i, item in enumerate(results, 1):
        status = "[PASS]" if item.passed else "[FAIL]"
        print(f"[{i}/{len(results)}] {item.name}... {status} ({item.seconds:.2f}s)")
        if not item.passed:
            errors.append(item)
            if args.verbose and item.detail:
                print(f"    {item.detail}")

    # Resumen final
    print("\n" + "=" * 70)
    print("\n[RESULTADOS]")
    print(f"   Total:    {len(results)}")
    print(f"   Passed:   {len(results) - len(errors)}")
    print(f"   Failed:   {len(errors)}")

    if errors:
        print("\n" + "=" * 70)
        print("\n[ERRORES DETALLADOS]\n")
        for i, item in enumerate(errors, 1):
            print(f"{i}. {item.name}")
            print(f"   Mensaje: {item.detail or 'el chequeo devolvió False'}")
            print()

    if not errors:
        print("\n[OK] Todos los chequeos pasaron!")
        sys.exit(0)
    else:
        print(f"\n[WARN] {len(errors)} chequeo(s) fallaron")
        sys.exit(1)


if __name__ == "__main__":
    main()
