import sys
import argparse

from GenPerm.config import DEFAULT_SEED, DEFAULT_SEARCH_TRIALS, DEFAULT_THREADS, DEFAULT_TRIALS
from GenPerm.debug import configure_logging
from GenPerm.errors import GenPermError
from GenPerm.runner import EXIT_ERROR, FORMATS, JobConfig, group_actions, run_job


EPILOG = """
Ejemplos:
  genperm enumerate --n 4                                          # 37 funciones irreducibles (JSONL)
  genperm enumerate --n 5 --allow-big --threads 4 --out rays5.jsonl
  genperm check-supermodular --in f.json                           # modular | supermodular | not supermodular
  genperm check-irreducible --in f.json
  genperm decompose --in f.json --rays rays4.jsonl
  genperm reconstruct --in s.json
  genperm path-sums --in f.json
  genperm balanced check --in ejemplo.txt                          # una línea por conjunto: 1,2,3
  genperm balanced z-irreducible --in ejemplo.txt
  genperm balanced enumerate --N 3 --out balanced3.jsonl
  genperm balanced z-search --N 4 --trials 500 --seed 7
  genperm matroid from-supermodular --in f.json
  genperm matroid enumerate --n 4 --format csv
  genperm nondecreasing count --n 6
  genperm two-layer --n 5 --t 2 --verify --oracle --allow-big
  genperm det-experiment --N 3 --trials 10000 --seed 1 --format csv
  genperm draw --in f.json --out f.svg --badge
  genperm self-test --debug
        """


def _common_parser() -> argparse.ArgumentParser:
    """Flags globales, aceptados después de cualquier subcomando."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-o", "--out",
        type=str,
        metavar='FILE',
        help="Archivo de salida (JSON/JSONL/CSV/SVG). Sin --out los datos van a stdout."
    )
    common.add_argument(
        "--format",
        choices=FORMATS,
        default='json',
        help="Formato de las listas: 'json' (JSONL, un objeto por línea) o 'csv'"
    )
    common.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"Semilla del generador lineal congruencial (default: {DEFAULT_SEED})"
    )
    common.add_argument(
        "--threads",
        type=int,
        default=DEFAULT_THREADS,
        metavar='K',
        help="Workers para la doble descripción (la salida no depende de K)"
    )
    common.add_argument(
        "--allow-big",
        action="store_true",
        help="Habilita las enumeraciones de n = 5 (varios minutos u horas)"
    )
    common.add_argument(
        "--no-progress",
        action="store_true",
        help="Oculta la barra de progreso de las enumeraciones grandes"
    )
    common.add_argument(
        "--debug",
        action="store_true",
        help="Activa logs detallados (doble descripción, búsquedas, archivos)"
    )
    return common


def _add_input(parser, help_text="Archivo de entrada (JSON)"):
    parser.add_argument("--in", dest="input", type=str, metavar='FILE', required=True, help=help_text)


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="genperm",
        description="GenPerm - Permutoedros generalizados y funciones supermodulares (aritmética exacta)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMANDO")
    sub.required = True

    p = sub.add_parser("enumerate", parents=[common], help="Funciones supermodulares irreducibles de [n]")
    p.add_argument("--n", type=int, required=True, help="Tamaño del conjunto base (2..5)")

    p = sub.add_parser("check-supermodular", parents=[common], help="Clasifica una función de conjunto")
    _add_input(p)

    p = sub.add_parser("check-irreducible", parents=[common], help="Certificado de irreducibilidad")
    _add_input(p)

    p = sub.add_parser("decompose", parents=[common], help="Descomposición cónica en irreducibles")
    _add_input(p)
    p.add_argument("--rays", type=str, metavar='FILE',
                   help="JSONL de irreducibles (si falta, se enumeran para el n de la entrada)")

    p = sub.add_parser("reconstruct", parents=[common], help="Función con supermodularidades dadas")
    _add_input(p, "Vector de supermodularidades (kind 'supermodularity')")

    p = sub.add_parser("path-sums", parents=[common], help="Sumas de camino por color")
    _add_input(p, "Función de conjunto o vector de supermodularidades")

    balanced = sub.add_parser("balanced", help="Multiconjuntos y vectores balanceados")
    bsub = balanced.add_subparsers(dest="action", metavar="ACCION")
    bsub.required = True
    for action in group_actions('balanced'):
        p = bsub.add_parser(action, parents=[common])
        p.add_argument("--N", type=int, help="Tamaño del conjunto base")
        if action in ('check', 'z-irreducible', 'complexity'):
            _add_input(p, "Multiconjunto en texto (una línea por conjunto) o JSON 'balanced'")
        if action == 'enumerate':
            p.add_argument("--method", choices=['both', 'cone', 'support'], default='both',
                           help="Método de enumeración (both = ambos y deben coincidir)")
        if action == 'z-search':
            p.add_argument("--trials", type=int, default=DEFAULT_SEARCH_TRIALS,
                           help=f"Intentos de la búsqueda (default: {DEFAULT_SEARCH_TRIALS})")

    matroid = sub.add_parser("matroid", help="Matroides y funciones simples")
    msub = matroid.add_subparsers(dest="action", metavar="ACCION")
    msub.required = True
    for action in group_actions('matroid'):
        p = msub.add_parser(action, parents=[common])
        if action == 'enumerate':
            p.add_argument("--n", type=int, required=True, help="Tamaño del conjunto base (0..5)")
        else:
            _add_input(p, "Función (from-supermodular) o matroide JSON")

    nondecreasing = sub.add_parser("nondecreasing", help="Funciones no decrecientes y anticadenas")
    nsub = nondecreasing.add_subparsers(dest="action", metavar="ACCION")
    nsub.required = True
    p = nsub.add_parser("check", parents=[common])
    _add_input(p)
    p = nsub.add_parser("count", parents=[common])
    p.add_argument("--n", type=int, required=True, help="Tamaño del conjunto base (0..6)")

    p = sub.add_parser("two-layer", parents=[common], help="Familia de irreducibles de dos capas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True, help="Capa inferior (1..n-2)")
    p.add_argument("--verify", action="store_true", help="Identidad, separación y dimensión del span")
    p.add_argument("--oracle", action="store_true", help="Compara contra los rayos del cono")

    p = sub.add_parser("det-experiment", parents=[common], help="Determinantes de matrices 0/1 aleatorias")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                   help=f"Muestras (default: {DEFAULT_TRIALS})")
    p.add_argument("--verify", action="store_true", help="Chequea las operaciones de fila en cada muestra")

    p = sub.add_parser("draw", parents=[common], help="SVG del polígono (n = 3) o del retículo (n <= 4)")
    _add_input(p)
    p.add_argument("--kind", choices=['auto', 'polytope', 'lattice'], default='auto')
    p.add_argument("--badge", action="store_true", help="Badge con fecha y versión")

    sub.add_parser("self-test", parents=[common], help="Batería de invariantes embebida")
    return parser


def config_from_args(args) -> JobConfig:
    return JobConfig(
        command=args.command,
        action=getattr(args, 'action', None),
        n=getattr(args, 'n', None),
        N=getattr(args, 'N', None),
        t=getattr(args, 't', None),
        input=getattr(args, 'input', None),
        rays=getattr(args, 'rays', None),
        out=args.out,
        seed=args.seed,
        trials=DEFAULT_TRIALS if getattr(args, 'trials', None) is None else args.trials,
        format=args.format,
        threads=args.threads,
        allow_big=args.allow_big,
        method=getattr(args, 'method', 'both'),
        verify=getattr(args, 'verify', False),
        oracle=getattr(args, 'oracle', False),
        kind=getattr(args, 'kind', 'auto'),
        badge=getattr(args, 'badge', False),
        progress=not args.no_progress,
    )


def main(argv=None):
    """Punto de entrada CLI para GenPerm."""
    args = build_parser().parse_args(argv)
    configure_logging(args.debug)
    try:
        config = config_from_args(args)
    except GenPermError as e:
        print(f"genperm: {e}", file=sys.stderr)
        sys.exit(EXIT_ERROR)
    code = run_job(config)
    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()
