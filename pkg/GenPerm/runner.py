"""
GenPerm.runner

Orquestación de trabajos del CLI: recibe un JobConfig ya resuelto, despacha a
las operaciones de la biblioteca, escribe los artefactos (JSON / JSONL / CSV /
SVG) y devuelve el código de salida.

Códigos de salida:
    0  verdadero / éxito
    1  falso (chequeos booleanos)
    2  error de uso o de entrada (GenPermError)
    3  violación de invariante interno
"""

import json
import logging
import os
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

from GenPerm.balanced import (
    SubsetMultiset, balance_of, complexity_of_balanced, determinant_distribution_check,
    determinant_experiment, enumerate_irreducible_balanced, find_balanced_submultiset,
    is_irreducible_balanced, max_zero_one_determinant, row_operation_check,
    support_independent, verify_complexity_bound, z_irreducible_search,
)
from GenPerm.balanced.experiments import LinearCongruential
from GenPerm.balanced.vectors import BalancedVector
from GenPerm.cone import conic_decompose, enumerate_irreducible_supermodular, is_irreducible_supermodular
from GenPerm.config import (
    BIG_ENUMERATION_N, DEFAULT_SEED, DEFAULT_THREADS, DEFAULT_TRIALS, MATROID_SLOW_N,
)
from GenPerm.core.checks import first_violation, is_modular
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import canonical_subsets, elements_of, format_set
from GenPerm.errors import FormatError, GenPermError, InvariantViolation, UsageError
from GenPerm.formats import (
    dumps, parse_multiset_text, read_json_file, read_jsonl_file, set_function_to_json,
    write_csv, write_jsonl,
)
from GenPerm.matroid import (
    Matroid, enumerate_loopless_matroids, is_reducible_matroid, matroid_to_supermodular,
    supermodular_to_matroid,
)
from GenPerm.monotone import count_antichains, is_irreducible_nondecreasing, is_nondecreasing
from GenPerm.transform import (
    SupermodularityVector, apply_t, color_weights, complexity_of, path_sums_by_color, reconstruct,
)
from GenPerm.twolayer import (
    enumerate_two_layer, span_dimension, two_layer_oracle, verify_pairwise_separation,
    verify_two_layer_identity,
)
from GenPerm.utils import format_rational

logger = logging.getLogger('GenPerm')

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_INVARIANT = 3

FORMATS = ('json', 'csv')


@dataclass
class JobConfig:
    """
    Configuración resuelta de un trabajo del CLI.

    Attributes:
        command (str): Comando principal (enumerate, balanced, matroid, ...)
        action (str): Subcomando de los grupos balanced / matroid / nondecreasing
        n (int): Tamaño del conjunto base (funciones, matroides, dos capas)
        N (int): Tamaño del conjunto base (vectores balanceados, determinantes)
        t (int): Capa inferior de la familia de dos capas
        input (str): Archivo de entrada (--in)
        rays (str): JSONL de rayos para decompose (--rays)
        out (str): Archivo de salida (--out); None = stdout
        seed (int): Semilla del generador lineal congruencial
        trials (int): Muestras de los experimentos aleatorios
        format (str): 'json' o 'csv'
        threads (int): Workers para la doble descripción
        allow_big (bool): Habilita las enumeraciones de n = 5
        method (str): Método de balanced enumerate ('both', 'cone', 'support')
        verify (bool): Chequeos extra (two-layer, det-experiment)
        oracle (bool): Compara two-layer contra el cono
        kind (str): Tipo de dibujo ('auto', 'polytope', 'lattice')
        badge (bool): Badge de depuración en el SVG
        progress (bool): Barra de progreso en enumeraciones grandes
    """
    command: str
    action: Optional[str] = None
    n: Optional[int] = None
    N: Optional[int] = None
    t: Optional[int] = None
    input: Optional[str] = None
    rays: Optional[str] = None
    out: Optional[str] = None
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    format: str = 'json'
    threads: int = DEFAULT_THREADS
    allow_big: bool = False
    method: str = 'both'
    verify: bool = False
    oracle: bool = False
    kind: str = 'auto'
    badge: bool = False
    progress: bool = True

    def __post_init__(self):
        if self.format not in FORMATS:
            raise UsageError(f"formato desconocido: {self.format!r} (opciones: {', '.join(FORMATS)})")
        if self.threads < 1:
            raise UsageError(f"--threads debe ser >= 1 (recibido {self.threads})")
        if self.trials < 1:
            raise UsageError(f"--trials debe ser >= 1 (recibido {self.trials})")


# === helpers de E/S ===

def _need(value, flag: str, command: str):
    if value is None:
        raise UsageError(f"{command}: falta {flag}")
    return value


def _guard_big(config: JobConfig, n: int, threshold: int = BIG_ENUMERATION_N) -> None:
    if n >= threshold and not config.allow_big:
        raise UsageError(f"n={n} tarda varios minutos: agregar --allow-big para continuar")


@contextmanager
def _output(config: JobConfig):
    """Archivo de --out (creando el directorio) o stdout."""
    if not config.out:
        yield sys.stdout
        return
    output_dir = os.path.dirname(config.out)
    if output_dir and not os.path.exists(output_dir):
        os.makedirs(output_dir, exist_ok=True)
        logger.debug(f"Directorio creado: {output_dir}")
    with open(config.out, 'w', encoding='utf-8', newline='') as fh:
        yield fh
    logger.info(f"Archivo generado: {config.out}")


def _summary(config: JobConfig, text: str) -> None:
    """Resumen en stdout, salvo que stdout ya lleve los datos (entonces al log)."""
    if config.out:
        print(text)
    else:
        logger.info(text)


def _emit_object(config: JobConfig, obj) -> None:
    with _output(config) as fh:
        fh.write(dumps(obj) + "\n")


def _emit_json(config: JobConfig, data: Dict) -> None:
    with _output(config) as fh:
        fh.write(json.dumps(data, ensure_ascii=False, separators=(',', ':')) + "\n")


def _function_rows(functions: List[SetFunction]):
    n = functions[0].n if functions else 0
    masks = canonical_subsets(n) if functions else ()
    fields = ['index'] + [format_set(m) for m in masks]
    rows = []
    for idx, f in enumerate(functions):
        row = {'index': idx}
        row.update({format_set(m): format_rational(f(m)) for m in masks})
        rows.append(row)
    return fields, rows


def _balanced_rows(vectors: List[BalancedVector]):
    fields = ['index', 'N', 'complexity', 'support']
    rows = [{
        'index': idx,
        'N': v.N,
        'complexity': complexity_of_balanced(v),
        'support': " ".join(f"{format_set(m)}x{q}" for m, q in v.entries),
    } for idx, v in enumerate(vectors)]
    return fields, rows


def _matroid_rows(matroids: List[Matroid]):
    fields = ['index', 'n', 'rank', 'bases']
    rows = [{
        'index': idx,
        'n': M.n,
        'rank': M.r,
        'bases': " ".join(format_set(b) for b in M.bases),
    } for idx, M in enumerate(matroids)]
    return fields, rows


def _emit_list(config: JobConfig, objects: List, rows_fn: Callable) -> None:
    """JSONL (un objeto por línea) o CSV según --format."""
    with _output(config) as fh:
        if config.format == 'csv':
            fields, rows = rows_fn(objects)
            write_csv(fh, rows, fields)
        else:
            write_jsonl(fh, objects)


def _load_function(config: JobConfig) -> SetFunction:
    path = _need(config.input, '--in', config.command)
    obj = read_json_file(path)
    if not isinstance(obj, SetFunction):
        raise FormatError(f"{path}: se esperaba una función de conjunto (kind 'set_function')")
    return obj


def _load_balanced(config: JobConfig) -> BalancedVector:
    """JSON "balanced" o texto de multiconjunto (una línea por conjunto)."""
    path = _need(config.input, '--in', config.command)
    if path.endswith('.json'):
        return read_json_file(path, 'balanced')
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            text = fh.read()
    except OSError as e:
        raise FormatError(f"no se pudo leer {path}: {e}") from e
    return parse_multiset_text(text, config.N).to_vector()


def _as_multiset(v: BalancedVector) -> SubsetMultiset:
    if any(q.denominator != 1 for _, q in v.entries):
        raise FormatError("un multiconjunto necesita multiplicidades enteras")
    return SubsetMultiset(v.N, tuple((m, int(q)) for m, q in v.entries))


def _verdict(flag: bool) -> int:
    return EXIT_TRUE if flag else EXIT_FALSE


# === comandos de funciones supermodulares ===

def _cmd_enumerate(config: JobConfig) -> int:
    n = _need(config.n, '--n', 'enumerate')
    _guard_big(config, n)
    start = time.perf_counter()
    rays = enumerate_irreducible_supermodular(
        n, threads=config.threads, progress=config.progress and n >= BIG_ENUMERATION_N,
    )
    elapsed = time.perf_counter() - start
    _emit_list(config, rays, _function_rows)
    top = max(complexity_of(f) for f in rays)
    _summary(config, f"n={n} irreducibles={len(rays)} complejidad_max={top} tiempo={elapsed:.2f}s")
    return EXIT_TRUE


def _cmd_check_supermodular(config: JobConfig) -> int:
    f = _load_function(config)
    if is_modular(f):
        verdict = "modular"
    else:
        violation = first_violation(f)
        verdict = "supermodular" if violation is None else "not supermodular"
        if violation is not None:
            pair, value = violation
            logger.info(f"par que falla: s{pair} = {value}")
    print(verdict)
    return _verdict(verdict != "not supermodular")


def _cmd_check_irreducible(config: JobConfig) -> int:
    f = _load_function(config)
    cert = is_irreducible_supermodular(f)
    print(f"{'irreducible' if cert else 'reducible'} rango={cert.rank}/{cert.required} "
          f"pares_ajustados={len(cert.tight_pairs)}")
    return _verdict(bool(cert))


def _load_rays(config: JobConfig, n: int) -> List[SetFunction]:
    if config.rays:
        rays = read_jsonl_file(config.rays, 'set_function')
        logger.debug(f"{len(rays)} rayos leídos de {config.rays}")
        return rays
    _guard_big(config, n)
    return enumerate_irreducible_supermodular(n, threads=config.threads)


def _cmd_decompose(config: JobConfig) -> int:
    f = _load_function(config)
    rays = _load_rays(config, f.n)
    terms = conic_decompose(f, rays)
    _emit_json(config, {
        "kind": "decomposition",
        "n": f.n,
        "terms": [
            {"coefficient": format_rational(c), "index": idx, "function": set_function_to_json(rays[idx])}
            for c, idx in terms
        ],
    })
    _summary(config, f"n={f.n} términos={len(terms)}")
    return EXIT_TRUE


def _cmd_reconstruct(config: JobConfig) -> int:
    path = _need(config.input, '--in', 'reconstruct')
    s = read_json_file(path, 'supermodularity')
    f = reconstruct(s)
    _emit_object(config, f)
    return EXIT_TRUE


def _cmd_path_sums(config: JobConfig) -> int:
    path = _need(config.input, '--in', 'path-sums')
    obj = read_json_file(path)
    if isinstance(obj, SetFunction):
        s = apply_t(obj)
        weights = [format_rational(m) for m in color_weights(obj).m]
    elif isinstance(obj, SupermodularityVector):
        s, weights = obj, None
    else:
        raise FormatError(f"{path}: se esperaba 'set_function' o 'supermodularity'")
    sums = path_sums_by_color(s)
    consistent = all(len(values) == 1 for values in sums.values())
    report = {
        "kind": "path_sums",
        "n": s.n,
        "consistent": consistent,
        "colors": [
            {"color": color, "sums": [format_rational(v) for v in sorted(values)]}
            for color, values in sorted(sums.items())
        ],
    }
    if weights is not None:
        report["weights"] = weights
    _emit_json(config, report)
    return _verdict(consistent)


# === balanced ===

def _balanced_check(config: JobConfig) -> int:
    v = _load_balanced(config)
    cert = is_irreducible_balanced(v)
    print(
        f"{'irreducible' if cert else 'reducible'} m={complexity_of_balanced(v)} "
        f"soporte={cert.support_size} rango={cert.support_rank} "
        f"independiente={'sí' if support_independent(v) else 'no'}"
    )
    return _verdict(bool(cert))


def _balanced_z_irreducible(config: JobConfig) -> int:
    M = _as_multiset(_load_balanced(config))
    witness = find_balanced_submultiset(M)
    if witness is None:
        print(f"z-irreducible m={int(balance_of(M.to_vector()))}")
        return EXIT_TRUE
    print("z-reducible sub=" + " ".join(",".join(map(str, elements_of(m))) for m in witness.sets()))
    return EXIT_FALSE


def _balanced_complexity(config: JobConfig) -> int:
    v = _load_balanced(config)
    print(complexity_of_balanced(v))
    return EXIT_TRUE


def _balanced_enumerate(config: JobConfig) -> int:
    N = _need(config.N, '--N', 'balanced enumerate')
    start = time.perf_counter()
    vectors = enumerate_irreducible_balanced(N, method=config.method, threads=config.threads)
    elapsed = time.perf_counter() - start
    report = verify_complexity_bound(N, vectors)
    if not report:
        raise InvariantViolation(f"N={N}: complejidad {report.max_complexity} fuera de la cota")
    _emit_list(config, vectors, _balanced_rows)
    _summary(config, f"N={N} irreducibles={len(vectors)} complejidad_max={report.max_complexity} "
                     f"tiempo={elapsed:.2f}s")
    return EXIT_TRUE


def _balanced_z_search(config: JobConfig) -> int:
    N = _need(config.N, '--N', 'balanced z-search')
    result = z_irreducible_search(N, config.trials, config.seed)
    vectors = [M.to_vector() for M in result.found]
    _emit_list(config, vectors, _balanced_rows)
    _summary(config, f"N={N} intentos={result.trials} semilla={result.seed} "
                     f"encontrados={len(result.found)} m_max={result.max_complexity} "
                     f"cota={'ok' if result.bound_holds else 'FALLA'}")
    return _verdict(result.bound_holds)


def _balanced_det_distribution(config: JobConfig) -> int:
    N = _need(config.N, '--N', 'balanced det-distribution')
    holds = determinant_distribution_check(N)
    print(f"N={N} distribución={'ok' if holds else 'FALLA'} det_max={max_zero_one_determinant(N)}")
    return _verdict(holds)


# === matroid ===

def _load_matroid(config: JobConfig) -> Matroid:
    path = _need(config.input, '--in', config.command)
    return read_json_file(path, 'matroid')


def _matroid_check(config: JobConfig) -> int:
    M = _load_matroid(config)
    split = is_reducible_matroid(M)
    parts = "" if split is None else f" partición={format_set(split[0])}|{format_set(split[1])}"
    print(f"matroide válido n={M.n} rango={M.r} loops={list(M.loops())} coloops={list(M.coloops())} "
          f"{'reducible' if split else 'irreducible'}{parts}")
    return EXIT_TRUE


def _matroid_to_supermodular(config: JobConfig) -> int:
    _emit_object(config, matroid_to_supermodular(_load_matroid(config)))
    return EXIT_TRUE


def _matroid_from_supermodular(config: JobConfig) -> int:
    _emit_object(config, supermodular_to_matroid(_load_function(config)))
    return EXIT_TRUE


def _matroid_enumerate(config: JobConfig) -> int:
    n = _need(config.n, '--n', 'matroid enumerate')
    _guard_big(config, n, MATROID_SLOW_N)
    start = time.perf_counter()
    matroids = enumerate_loopless_matroids(n)
    elapsed = time.perf_counter() - start
    irreducible = sum(1 for M in matroids if is_reducible_matroid(M) is None)
    _emit_list(config, matroids, _matroid_rows)
    _summary(config, f"n={n} matroides_sin_loops={len(matroids)} irreducibles={irreducible} "
                     f"tiempo={elapsed:.2f}s")
    return EXIT_TRUE


# === nondecreasing ===

def _nondecreasing_check(config: JobConfig) -> int:
    f = _load_function(config)
    if not is_nondecreasing(f):
        print("not nondecreasing")
        return EXIT_FALSE
    found = is_irreducible_nondecreasing(f)
    if found is None:
        print("reducible")
        return EXIT_FALSE
    c, A = found
    print(f"irreducible c={format_rational(c)} A={A}")
    return EXIT_TRUE


def _nondecreasing_count(config: JobConfig) -> int:
    n = _need(config.n, '--n', 'nondecreasing count')
    total, nonempty = count_antichains(n)
    print(f"n={n} anticadenas={total} no_vacías={nonempty}")
    return EXIT_TRUE


# === two-layer / experimentos / dibujo ===

def _cmd_two_layer(config: JobConfig) -> int:
    n = _need(config.n, '--n', 'two-layer')
    t = _need(config.t, '--t', 'two-layer')
    if config.oracle:
        _guard_big(config, n)
    family = enumerate_two_layer(n, t)
    _emit_list(config, family, _function_rows)
    ok = True
    if config.verify:
        checks = {
            'identidad': verify_two_layer_identity(n, t),
            'separación': verify_pairwise_separation(n, t, family),
            'dimensión': span_dimension(n, t, family) == n + 1,
        }
        for name, passed in checks.items():
            logger.info(f"[2LAYER] {name}: {'ok' if passed else 'FALLA'}")
        ok = all(checks.values())
    if config.oracle:
        matches = two_layer_oracle(n, t)
        logger.info(f"[2LAYER] oráculo del cono: {'ok' if matches else 'FALLA'}")
        ok = ok and matches
    _summary(config, f"n={n} t={t} |K|={len(family)}")
    return _verdict(ok)


def _row_operation_sweep(N: int, trials: int, seed: int) -> int:
    """Cantidad de (A, i, signos) aleatorios donde falla alguna identidad."""
    rng = LinearCongruential(seed)
    failures = 0
    for _ in range(trials):
        A = rng.zero_one_matrix(N)
        i = 1 + rng.below(N)
        signs = rng.below(1 << N)
        if not row_operation_check(A, i, signs):
            failures += 1
    return failures


def _cmd_det_experiment(config: JobConfig) -> int:
    N = _need(config.N, '--N', 'det-experiment')
    stats = determinant_experiment(N, config.trials, config.seed)
    with _output(config) as fh:
        if config.format == 'csv':
            row = stats.csv_row()
            write_csv(fh, [row], list(row))
        else:
            record = dict(stats.csv_row())
            record['kind'] = 'det_experiment'
            record['histogram'] = [[d, c] for d, c in stats.histogram]
            fh.write(json.dumps(record, separators=(',', ':')) + "\n")
    ok = True
    if config.verify:
        failures = _row_operation_sweep(N, config.trials, config.seed)
        logger.info(f"[DET] operaciones de fila: {failures} fallas en {config.trials} muestras")
        ok = failures == 0
    _summary(config, f"N={N} muestras={stats.trials} singulares={stats.singular_count} "
                     f"fracción={stats.singular_fraction:.4f} det_max={stats.max_abs_det}")
    return _verdict(ok)


def _cmd_draw(config: JobConfig) -> int:
    from GenPerm.draw import render_svg

    f = _load_function(config)
    output = config.out or os.path.splitext(os.path.basename(config.input))[0] + ".svg"
    kind = render_svg(f, output, kind=config.kind, badge=config.badge)
    print(f"{kind} -> {output}")
    return EXIT_TRUE


def _cmd_self_test(config: JobConfig) -> int:
    from GenPerm.selftest import run_self_test

    report = run_self_test(include_big=config.allow_big)
    for item in report:
        print(f"[{'OK' if item.passed else 'FALLA'}] {item.name}" + (f" ({item.detail})" if item.detail else ""))
    passed = sum(1 for item in report if item.passed)
    print(f"{passed}/{len(report)} chequeos pasaron")
    return _verdict(passed == len(report))


_GROUPS: Dict[str, Dict[str, Callable[[JobConfig], int]]] = {
    'balanced': {
        'check': _balanced_check,
        'z-irreducible': _balanced_z_irreducible,
        'complexity': _balanced_complexity,
        'enumerate': _balanced_enumerate,
        'z-search': _balanced_z_search,
        'det-distribution': _balanced_det_distribution,
    },
    'matroid': {
        'check': _matroid_check,
        'to-supermodular': _matroid_to_supermodular,
        'from-supermodular': _matroid_from_supermodular,
        'enumerate': _matroid_enumerate,
    },
    'nondecreasing': {
        'check': _nondecreasing_check,
        'count': _nondecreasing_count,
    },
}

_COMMANDS: Dict[str, Callable[[JobConfig], int]] = {
    'enumerate': _cmd_enumerate,
    'check-supermodular': _cmd_check_supermodular,
    'check-irreducible': _cmd_check_irreducible,
    'decompose': _cmd_decompose,
    'reconstruct': _cmd_reconstruct,
    'path-sums': _cmd_path_sums,
    'two-layer': _cmd_two_layer,
    'det-experiment': _cmd_det_experiment,
    'draw': _cmd_draw,
    'self-test': _cmd_self_test,
}


def group_actions(group: str) -> Iterable[str]:
    return tuple(_GROUPS[group])


def command_names() -> Iterable[str]:
    return tuple(_COMMANDS) + tuple(_GROUPS)


def _resolve(config: JobConfig) -> Callable[[JobConfig], int]:
    if config.command in _GROUPS:
        actions = _GROUPS[config.command]
        if config.action not in actions:
            raise UsageError(
                f"{config.command}: acción desconocida {config.action!r} (opciones: {', '.join(actions)})"
            )
        return actions[config.action]
    if config.command not in _COMMANDS:
        raise UsageError(f"comando desconocido: {config.command!r}")
    return _COMMANDS[config.command]


def run_job(config: JobConfig) -> int:
    """
    Ejecuta un trabajo y traduce excepciones a códigos de salida.

    Returns:
        int: 0 verdadero/éxito, 1 falso, 2 error de uso o entrada, 3 invariante violado
    """
    label = config.command + (f" {config.action}" if config.action else "")
    logger.debug(f"[JOB] {label}: {config}")
    try:
        handler = _resolve(config)
        return handler(config)
    except InvariantViolation as e:
        logger.error(f"Violación de invariante en {label}: {e}")
        return EXIT_INVARIANT
    except GenPermError as e:
        logger.error(f"{label}: {e}")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"{label}: error de E/S: {e}")
        return EXIT_ERROR
