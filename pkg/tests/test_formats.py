#!/usr/bin/env python3
"""
Tests de los formatos de intercambio (JSON, JSONL, texto de multiconjuntos, CSV).
"""

import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm.balanced import BalancedVector, SubsetMultiset
from GenPerm.core import SetFunction
from GenPerm.errors import FormatError, GenPermError, InvalidMatroid
from GenPerm.formats import (
    dumps, format_multiset_text, iter_jsonl, loads, parse_multiset_text,
    read_json_file, read_jsonl_file, to_json, write_csv, write_jsonl,
)
from GenPerm.matroid import Matroid, uniform
from GenPerm.monotone import Antichain
from GenPerm.transform import SupermodularityVector, apply_t
from GenPerm.twolayer import alpha


def test_set_function_canonical_json():
    assert dumps(alpha(2, 1)) == (
        '{"kind":"set_function","n":2,"values":['
        '{"set":[],"value":"0/1"},{"set":[1],"value":"0/1"},'
        '{"set":[2],"value":"0/1"},{"set":[1,2],"value":"1/1"}]}'
    )


def test_set_function_accepts_flat_values_and_any_order():
    assert loads('{"n": 1, "values": [0, "1/2"]}') == SetFunction(1, (0, Fraction(1, 2)))
    text = ('{"kind": "set_function", "n": 1, "values": ['
            '{"set": [1], "value": "3"}, {"set": [], "value": 1}]}')
    assert loads(text) == SetFunction(1, (1, 3))


def test_set_function_errors():
    with pytest.raises(FormatError):
        loads('{"n": 1, "values": [{"set": [], "value": 0}, {"set": [], "value": 1}]}')
    with pytest.raises(GenPermError):
        loads('{"n": 1, "values": [{"set": [], "value": 0}]}')
    with pytest.raises(FormatError):
        loads('{"n": 1, "values": [0, 0.5]}')
    with pytest.raises(FormatError):
        loads('{"values": [0]}')
    with pytest.raises(FormatError):
        loads('{"n": 1, "values": [0, 1]')


def test_unknown_kind():
    with pytest.raises(FormatError):
        loads('{"kind": "polygon", "n": 1}')


def test_supermodularity_json():
    s = apply_t(alpha(3, 1))
    data = to_json(s)
    assert data["kind"] == "supermodularity"
    assert data["entries"][0] == {"meet": [], "add": [1, 2], "value": "1/1"}
    assert loads(dumps(s)) == s
    assert loads('{"kind": "supermodularity", "n": 2, "entries": [5]}') == SupermodularityVector(2, (5,))


def test_supermodularity_missing_pairs():
    with pytest.raises(FormatError):
        loads('{"kind": "supermodularity", "n": 3, "entries": '
              '[{"meet": [], "add": [2, 1], "value": "1"}]}')


def test_supermodularity_file_written_by_hand():
    text = '{"kind":"supermodularity","n":2,"entries":[{"meet":[],"add":[1,2],"value":"1/1"}]}'
    assert loads(text) == SupermodularityVector(2, (1,))
    with pytest.raises(FormatError):
        loads('{"kind":"supermodularity","n":2,"entries":[{"meet":[],"pair":[1,2],"value":"1/1"}]}')


def test_kind_is_inferred_from_entries():
    s = apply_t(alpha(3, 1))
    data = to_json(s)
    del data["kind"]
    assert loads(json.dumps(data)) == s
    assert loads('{"n": 2, "values": [0, 0, 0, 1]}') == SetFunction(2, (0, 0, 0, 1))


def test_antichain_matroid_and_balanced_json():
    A = Antichain(3, (3, 4))
    assert to_json(A) == {"kind": "antichain", "n": 3, "sets": [[3], [1, 2]]}
    assert loads(dumps(uniform(1, 2))) == uniform(1, 2)
    v = BalancedVector(2, ((1, 1), (2, 1)))
    assert to_json(SubsetMultiset(2, ((1, 1), (2, 1)))) == to_json(v)
    assert loads(dumps(v)) == v
    with pytest.raises(InvalidMatroid):
        loads('{"kind": "matroid", "n": 4, "bases": [[1, 2], [3, 4]]}')


def test_unsupported_type():
    with pytest.raises(FormatError):
        to_json(object())


# --- multiconjuntos en texto ---

def test_parse_multiset_text():
    text = "# ejemplo N=4\n1\n1\n2,3\n2, 4\n\n3,4\n"
    M = parse_multiset_text(text)
    assert M.N == 4
    assert M.counts == ((1, 2), (0b0110, 1), (0b1010, 1), (0b1100, 1))
    assert parse_multiset_text(format_multiset_text(M)) == M
    assert parse_multiset_text("1\n", N=3).N == 3


@pytest.mark.parametrize("text", ["", "# solo comentario\n", "1,a\n", "1,,\n,\n"])
def test_bad_multiset_text(text):
    with pytest.raises(FormatError):
        parse_multiset_text(text)


# --- archivos, JSONL y CSV ---

def test_jsonl_stream():
    stream = io.StringIO()
    assert write_jsonl(stream, [alpha(3, 1), alpha(3, 2)]) == 2
    stream.seek(0)
    assert list(iter_jsonl(stream)) == [alpha(3, 1), alpha(3, 2)]


def test_jsonl_reports_line_number():
    stream = io.StringIO(dumps(alpha(2, 1)) + "\n\n{roto\n")
    with pytest.raises(FormatError, match="línea 3"):
        list(iter_jsonl(stream))


def test_json_files(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(dumps(alpha(3, 2)), encoding='utf-8')
    assert read_json_file(str(path)) == alpha(3, 2)
    rays = tmp_path / "rays.jsonl"
    rays.write_text(dumps(alpha(3, 1)) + "\n" + dumps(alpha(3, 2)) + "\n", encoding='utf-8')
    assert read_jsonl_file(str(rays)) == [alpha(3, 1), alpha(3, 2)]
    with pytest.raises(FormatError):
        read_json_file(str(tmp_path / "no-existe.json"))


def test_csv_rows():
    stream = io.StringIO()
    write_csv(stream, [{'N': 3, 'trials': 10}], ['N', 'trials'])
    assert stream.getvalue() == "N,trials\n3,10\n"
