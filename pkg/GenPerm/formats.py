"""
GenPerm.formats

Lectura y escritura de los formatos de intercambio:

- JSON de SetFunction, SupermodularityVector, Antichain, Matroid y BalancedVector
- JSONL para listas largas (una función por línea)
- Texto de multiconjuntos: una línea por conjunto, elementos separados por coma
- CSV de experimentos

Los racionales siempre se escriben como "p/q" y se aceptan como "p/q", "p" o int.
Los conjuntos se escriben como listas ordenadas de elementos 1-based.
"""

import csv
import json
import logging
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO

from GenPerm.balanced.vectors import BalancedVector, SubsetMultiset
from GenPerm.core.setfunction import SetFunction
from GenPerm.core.subsets import close_pair_index, elements_of, make_close_pair, mask_from_elements
from GenPerm.errors import FormatError, GenPermError
from GenPerm.matroid import Matroid
from GenPerm.monotone import Antichain
from GenPerm.transform import SupermodularityVector
from GenPerm.utils import format_rational, to_fraction

logger = logging.getLogger('GenPerm')


# === helpers ===

def _require(data: Dict[str, Any], key: str, kind: str):
    if not isinstance(data, dict):
        raise FormatError(f"{kind}: se esperaba un objeto JSON, llegó {type(data).__name__}")
    if key not in data:
        raise FormatError(f"{kind}: falta la clave '{key}'")
    return data[key]


def _size(data: Dict[str, Any], key: str, kind: str) -> int:
    value = _require(data, key, kind)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"{kind}: '{key}' debe ser entero, llegó {value!r}")
    return value


def _mask(elements, n: int, kind: str) -> int:
    if not isinstance(elements, list):
        raise FormatError(f"{kind}: un conjunto debe ser una lista de elementos, llegó {elements!r}")
    return mask_from_elements(elements, n)


# === SetFunction ===

def set_function_to_json(f: SetFunction) -> Dict[str, Any]:
    return {
        "kind": "set_function",
        "n": f.n,
        "values": [{"set": elements_of(m), "value": format_rational(v)} for m, v in f.layer_values()],
    }


def set_function_from_json(data: Dict[str, Any]) -> SetFunction:
    """
    Acepta "values" como lista de {"set": [...], "value": "p/q"} (todos los
    subconjuntos, cualquier orden) o como lista plana indexada por máscara.
    """
    n = _size(data, "n", "set_function")
    values = _require(data, "values", "set_function")
    if not isinstance(values, list):
        raise FormatError("set_function: 'values' debe ser una lista")
    if values and isinstance(values[0], dict):
        mapping = {}
        for item in values:
            mask = _mask(_require(item, "set", "set_function"), n, "set_function")
            if mask in mapping:
                raise FormatError(f"set_function: conjunto repetido {elements_of(mask)}")
            mapping[mask] = to_fraction(_require(item, "value", "set_function"))
        return SetFunction.from_mapping(n, mapping)
    return SetFunction(n, tuple(to_fraction(v) for v in values))


# === SupermodularityVector ===

def supermodularity_to_json(s: SupermodularityVector) -> Dict[str, Any]:
    entries = []
    for pair, value in s.items():
        entries.append({
            "meet": elements_of(pair.meet),
            "add": [pair.a, pair.b],
            "value": format_rational(value),
        })
    return {"kind": "supermodularity", "n": s.n, "entries": entries}


def supermodularity_from_json(data: Dict[str, Any]) -> SupermodularityVector:
    """"entries" como lista de {"meet", "add", "value"} o lista plana en orden canónico."""
    n = _size(data, "n", "supermodularity")
    entries = _require(data, "entries", "supermodularity")
    if not isinstance(entries, list):
        raise FormatError("supermodularity: 'entries' debe ser una lista")
    if entries and isinstance(entries[0], dict):
        index = close_pair_index(n)
        values = [None] * len(index)
        for item in entries:
            meet = _mask(_require(item, "meet", "supermodularity"), n, "supermodularity")
            pair = _require(item, "add", "supermodularity")
            if not isinstance(pair, list) or len(pair) != 2:
                raise FormatError(f"supermodularity: 'add' debe tener dos elementos, llegó {pair!r}")
            key = make_close_pair(meet, pair[0], pair[1])
            values[index[key]] = to_fraction(_require(item, "value", "supermodularity"))
        if any(v is None for v in values):
            raise FormatError(f"supermodularity: faltan {values.count(None)} pares cercanos")
        return SupermodularityVector(n, tuple(values))
    return SupermodularityVector(n, tuple(to_fraction(v) for v in entries))


# === Antichain / Matroid ===

def antichain_to_json(A: Antichain) -> Dict[str, Any]:
    return {"kind": "antichain", "n": A.n, "sets": [elements_of(m) for m in A.sets]}


def antichain_from_json(data: Dict[str, Any]) -> Antichain:
    n = _size(data, "n", "antichain")
    sets = _require(data, "sets", "antichain")
    return Antichain(n, tuple(_mask(s, n, "antichain") for s in sets))


def matroid_to_json(M: Matroid) -> Dict[str, Any]:
    return {"kind": "matroid", "n": M.n, "bases": [elements_of(b) for b in M.bases]}


def matroid_from_json(data: Dict[str, Any]) -> Matroid:
    n = _size(data, "n", "matroid")
    bases = _require(data, "bases", "matroid")
    if not isinstance(bases, list):
        raise FormatError("matroid: 'bases' debe ser una lista")
    return Matroid(n, tuple(_mask(b, n, "matroid") for b in bases))


# === BalancedVector / multiconjuntos ===

def balanced_to_json(v: BalancedVector) -> Dict[str, Any]:
    return {
        "kind": "balanced",
        "N": v.N,
        "entries": [{"set": elements_of(m), "value": format_rational(q)} for m, q in v.entries],
    }


def balanced_from_json(data: Dict[str, Any]) -> BalancedVector:
    N = _size(data, "N", "balanced")
    entries = _require(data, "entries", "balanced")
    if not isinstance(entries, list):
        raise FormatError("balanced: 'entries' debe ser una lista")
    return BalancedVector(N, tuple(
        (_mask(_require(e, "set", "balanced"), N, "balanced"), to_fraction(_require(e, "value", "balanced")))
        for e in entries
    ))


def parse_multiset_text(text: str, N: Optional[int] = None) -> SubsetMultiset:
    """
    Una línea por conjunto ("1,2,3"); líneas repetidas = multiplicidad.

    Las líneas vacías y las que empiezan con '#' se ignoran. Si N no se da,
    se toma el mayor elemento que aparece.
    """
    rows: List[List[int]] = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            rows.append([int(tok) for tok in line.replace(' ', '').split(',') if tok])
        except ValueError as e:
            raise FormatError(f"multiconjunto, línea {number}: {line!r} no es una lista de enteros") from e
        if not rows[-1]:
            raise FormatError(f"multiconjunto, línea {number}: conjunto vacío")
    if not rows:
        raise FormatError("multiconjunto vacío")
    if N is None:
        N = max(max(r) for r in rows)
    return SubsetMultiset.from_sets(N, [mask_from_elements(r, N) for r in rows])


def format_multiset_text(M: SubsetMultiset) -> str:
    return "".join(",".join(map(str, elements_of(m))) + "\n" for m in M.sets())


# === despacho por "kind" ===

_READERS = {
    "set_function": set_function_from_json,
    "supermodularity": supermodularity_from_json,
    "antichain": antichain_from_json,
    "matroid": matroid_from_json,
    "balanced": balanced_from_json,
}


def to_json(obj) -> Dict[str, Any]:
    """Serializa cualquiera de los tipos soportados."""
    if isinstance(obj, SetFunction):
        return set_function_to_json(obj)
    if isinstance(obj, SupermodularityVector):
        return supermodularity_to_json(obj)
    if isinstance(obj, Antichain):
        return antichain_to_json(obj)
    if isinstance(obj, Matroid):
        return matroid_to_json(obj)
    if isinstance(obj, BalancedVector):
        return balanced_to_json(obj)
    if isinstance(obj, SubsetMultiset):
        return balanced_to_json(obj.to_vector())
    raise FormatError(f"tipo sin formato JSON: {type(obj).__name__}")


def _infer_kind(data) -> str:
    """Sin "kind": los "entries" con "meet" son un vector de supermodularidad."""
    if not isinstance(data, dict):
        return "set_function"
    if data.get("kind"):
        return data["kind"]
    entries = data.get("entries")
    if "values" not in data and isinstance(entries, list) and entries:
        if isinstance(entries[0], dict) and "meet" in entries[0]:
            return "supermodularity"
    return "set_function"


def from_json(data: Dict[str, Any], kind: Optional[str] = None):
    """Lee un objeto usando "kind" (o el tipo pedido explícitamente)."""
    kind = kind or _infer_kind(data)
    if kind not in _READERS:
        raise FormatError(f"tipo desconocido: {kind!r} (opciones: {', '.join(sorted(_READERS))})")
    return _READERS[kind](data)


def dumps(obj) -> str:
    """JSON canónico en una línea (sin espacios extra)."""
    return json.dumps(to_json(obj), ensure_ascii=False, separators=(',', ':'))


def loads(text: str, kind: Optional[str] = None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"JSON inválido: {e}") from e
    return from_json(data, kind)


def read_json_file(path: str, kind: Optional[str] = None):
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            text = fh.read()
    except OSError as e:
        raise FormatError(f"no se pudo leer {path}: {e}") from e
    return loads(text, kind)


# === JSONL ===

def write_jsonl(stream: TextIO, objects: Iterable) -> int:
    count = 0
    for obj in objects:
        stream.write(dumps(obj) + "\n")
        count += 1
    logger.debug(f"[JSONL] {count} registros escritos")
    return count


def iter_jsonl(stream: TextIO, kind: Optional[str] = None) -> Iterator:
    for number, line in enumerate(stream, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield loads(line, kind)
        except GenPermError as e:
            raise FormatError(f"línea {number}: {e}") from e


def read_jsonl_file(path: str, kind: Optional[str] = None) -> List:
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            return list(iter_jsonl(fh, kind))
    except OSError as e:
        raise FormatError(f"no se pudo leer {path}: {e}") from e


# === CSV ===

def write_csv(stream: TextIO, rows: Sequence[Dict[str, Any]], fieldnames: Sequence[str]) -> None:
    writer = csv.DictWriter(stream, fieldnames=list(fieldnames), lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    logger.debug(f"[CSV] {len(rows)} filas escritas")
