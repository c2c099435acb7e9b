#!/usr/bin/env python3
"""
Tests del CLI: parseo de argumentos, despacho de comandos, artefactos de
salida y códigos de salida (0 verdadero, 1 falso, 2 error, 3 invariante).
"""

import csv
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm.core import SetFunction, modular
from GenPerm.errors import UsageError
from GenPerm.formats import dumps, loads
from GenPerm.main import build_parser, main
from GenPerm.matroid import uniform
from GenPerm.runner import EXIT_ERROR, EXIT_FALSE, EXIT_TRUE, JobConfig, command_names, run_job
from GenPerm.transform import SupermodularityVector, apply_t
from GenPerm.twolayer import alpha

EXAMPLE_N4 = "# N = 4, m = 2\n1\n1\n2,3\n2,4\n3,4\n"
EXAMPLE_N5 = "1,2,3,4\n4\n1,2\n1,3,5\n2,3,5\n4,5\n"


def _run(argv):
    """Ejecuta el CLI y devuelve el código de salida."""
    try:
        main(argv)
    except SystemExit as e:
        return e.code
    return 0


def _write(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content if isinstance(content, str) else dumps(content), encoding='utf-8')
    return str(path)


def _lines(text):
    return [line for line in text.splitlines() if line.strip()]


# --- configuración ---

def test_every_command_has_a_parser():
    parser = build_parser()
    for name in command_names():
        with pytest.raises(SystemExit):
            parser.parse_args([name, '--help'])


def test_job_config_validation():
    with pytest.raises(UsageError):
        JobConfig(command='enumerate', format='xml')
    with pytest.raises(UsageError):
        JobConfig(command='enumerate', threads=0)
    with pytest.raises(UsageError):
        JobConfig(command='det-experiment', trials=0)


def test_unknown_command_and_missing_flags():
    assert run_job(JobConfig(command='bogus')) == EXIT_ERROR
    assert run_job(JobConfig(command='balanced', action='bogus')) == EXIT_ERROR
    assert run_job(JobConfig(command='enumerate')) == EXIT_ERROR


def test_invalid_trials_exit_code():
    assert _run(['det-experiment', '--N', '2', '--trials', '0']) == EXIT_ERROR


# --- enumerate / check / decompose ---

def test_enumerate_n3_jsonl(capsys):
    assert _run(['enumerate', '--n', '3']) == EXIT_TRUE
    lines = _lines(capsys.readouterr().out)
    assert len(lines) == 5
    assert loads(lines[0]).n == 3


def test_enumerate_csv_to_file(tmp_path, capsys):
    out = tmp_path / "out" / "rays3.csv"
    assert _run(['enumerate', '--n', '3', '--format', 'csv', '--out', str(out)]) == EXIT_TRUE
    rows = list(csv.reader(out.read_text(encoding='utf-8').splitlines()))
    assert rows[0] == ['index', '{}', '{1}', '{2}', '{3}', '{1,2}', '{1,3}', '{2,3}', '{1,2,3}']
    assert len(rows) == 6
    assert rows[1][0] == '0'
    assert "irreducibles=5" in capsys.readouterr().out


def test_enumerate_n5_needs_allow_big():
    assert _run(['enumerate', '--n', '5']) == EXIT_ERROR


@pytest.mark.parametrize("f,verdict,code", [
    (alpha(3, 1), "supermodular", EXIT_TRUE),
    (modular([1, 2, 3]), "modular", EXIT_TRUE),
    (SetFunction.by_cardinality(3, lambda k: min(k, 1)), "not supermodular", EXIT_FALSE),
])
def test_check_supermodular(tmp_path, capsys, f, verdict, code):
    path = _write(tmp_path, "f.json", f)
    assert _run(['check-supermodular', '--in', path]) == code
    assert capsys.readouterr().out.strip() == verdict


def test_check_irreducible(tmp_path, capsys):
    assert _run(['check-irreducible', '--in', _write(tmp_path, "a.json", alpha(4, 2))]) == EXIT_TRUE
    assert capsys.readouterr().out.startswith("irreducible rango=10/10")
    reducible = _write(tmp_path, "b.json", alpha(4, 1) + alpha(4, 2))
    assert _run(['check-irreducible', '--in', reducible]) == EXIT_FALSE


def test_missing_input_file(tmp_path):
    assert _run(['check-irreducible', '--in', str(tmp_path / "nada.json")]) == EXIT_ERROR


def test_decompose_with_ray_file(tmp_path, capsys):
    rays = tmp_path / "rays3.jsonl"
    assert _run(['enumerate', '--n', '3', '--out', str(rays)]) == EXIT_TRUE
    capsys.readouterr()
    f = _write(tmp_path, "f.json", alpha(3, 1).scale(2) + alpha(3, 2))
    assert _run(['decompose', '--in', f, '--rays', str(rays)]) == EXIT_TRUE
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "decomposition"
    assert report["terms"]
    assert all(term["function"]["kind"] == "set_function" for term in report["terms"])


def test_decompose_n3_without_ray_file(tmp_path, capsys):
    f = _write(tmp_path, "f.json", alpha(3, 2).scale(3))
    assert _run(['decompose', '--in', f]) == EXIT_TRUE
    report = json.loads(capsys.readouterr().out)
    assert [t["coefficient"] for t in report["terms"]] == ["3/1"]


# --- reconstruct / path-sums ---

def test_reconstruct(tmp_path, capsys):
    s = _write(tmp_path, "s.json", apply_t(alpha(3, 1) + modular([1, 1, 1])))
    assert _run(['reconstruct', '--in', s]) == EXIT_TRUE
    assert loads(capsys.readouterr().out) == alpha(3, 1)


def test_reconstruct_outside_image(tmp_path):
    s = _write(tmp_path, "s.json", SupermodularityVector(3, (1, 0, 0, 0, 0, 0)))
    assert _run(['reconstruct', '--in', s]) == EXIT_ERROR


def test_path_sums(tmp_path, capsys):
    assert _run(['path-sums', '--in', _write(tmp_path, "f.json", alpha(3, 1))]) == EXIT_TRUE
    report = json.loads(capsys.readouterr().out)
    assert report["consistent"] is True
    assert report["weights"] == ["1/1", "1/1", "1/1"]
    assert report["colors"][0] == {"color": 1, "sums": ["1/1"]}

    bad = _write(tmp_path, "s.json", SupermodularityVector(3, (1, 0, 0, 0, 0, 0)))
    assert _run(['path-sums', '--in', bad]) == EXIT_FALSE
    capsys.readouterr()

    plain = tmp_path / "plain.json"
    data = json.loads(dumps(apply_t(alpha(3, 1))))
    del data["kind"]
    plain.write_text(json.dumps(data), encoding='utf-8')
    assert _run(['path-sums', '--in', str(plain)]) == EXIT_TRUE
    assert "weights" not in json.loads(capsys.readouterr().out)


# --- balanced ---

def test_balanced_check_and_complexity(tmp_path, capsys):
    path = _write(tmp_path, "m4.txt", EXAMPLE_N4)
    assert _run(['balanced', 'check', '--in', path]) == EXIT_TRUE
    assert capsys.readouterr().out.startswith("irreducible m=2 soporte=4 rango=4")
    assert _run(['balanced', 'complexity', '--in', path]) == EXIT_TRUE
    assert capsys.readouterr().out.strip() == "2"


def test_balanced_example_n5(tmp_path, capsys):
    path = _write(tmp_path, "m5.txt", EXAMPLE_N5)
    assert _run(['balanced', 'z-irreducible', '--in', path]) == EXIT_TRUE
    assert capsys.readouterr().out.strip() == "z-irreducible m=3"
    assert _run(['balanced', 'check', '--in', path]) == EXIT_FALSE


def test_balanced_z_reducible(tmp_path, capsys):
    path = _write(tmp_path, "m.txt", "1\n2\n1,2\n")
    assert _run(['balanced', 'z-irreducible', '--in', path]) == EXIT_FALSE
    assert capsys.readouterr().out.strip() == "z-reducible sub=1 2"


def test_balanced_unbalanced_input(tmp_path):
    path = _write(tmp_path, "m.txt", "1,2\n")
    assert _run(['balanced', 'check', '--in', path, '--N', '3']) == EXIT_ERROR


def test_balanced_enumerate(tmp_path, capsys):
    assert _run(['balanced', 'enumerate', '--N', '2']) == EXIT_TRUE
    assert len(_lines(capsys.readouterr().out)) == 2
    out = tmp_path / "b3.csv"
    assert _run(['balanced', 'enumerate', '--N', '3', '--format', 'csv', '--out', str(out)]) == EXIT_TRUE
    assert _lines(out.read_text(encoding='utf-8'))[0] == "index,N,complexity,support"


def test_balanced_z_search_and_det_distribution(capsys):
    assert _run(['balanced', 'z-search', '--N', '3', '--trials', '30', '--seed', '5']) == EXIT_TRUE
    first = capsys.readouterr().out
    assert _run(['balanced', 'z-search', '--N', '3', '--trials', '30', '--seed', '5']) == EXIT_TRUE
    assert capsys.readouterr().out == first
    assert _run(['balanced', 'det-distribution', '--N', '2']) == EXIT_TRUE
    assert capsys.readouterr().out.strip() == "N=2 distribución=ok det_max=1"


# --- matroid / nondecreasing ---

def test_matroid_commands(tmp_path, capsys):
    assert _run(['matroid', 'enumerate', '--n', '3']) == EXIT_TRUE
    assert len(_lines(capsys.readouterr().out)) == 6

    M = _write(tmp_path, "m.json", uniform(1, 2))
    assert _run(['matroid', 'to-supermodular', '--in', M]) == EXIT_TRUE
    assert loads(capsys.readouterr().out) == alpha(2, 1)

    f = _write(tmp_path, "f.json", alpha(2, 1))
    assert _run(['matroid', 'from-supermodular', '--in', f]) == EXIT_TRUE
    assert loads(capsys.readouterr().out) == uniform(1, 2)

    assert _run(['matroid', 'check', '--in', M]) == EXIT_TRUE
    assert "irreducible" in capsys.readouterr().out


def test_matroid_from_non_simple_function(tmp_path):
    f = _write(tmp_path, "f.json", alpha(3, 1) + alpha(3, 2))
    assert _run(['matroid', 'from-supermodular', '--in', f]) == EXIT_ERROR


def test_nondecreasing_commands(tmp_path, capsys):
    assert _run(['nondecreasing', 'count', '--n', '4']) == EXIT_TRUE
    assert capsys.readouterr().out.strip() == "n=4 anticadenas=168 no_vacías=167"
    up = SetFunction.from_callable(2, lambda I: 1 if I == 0b11 else 0)
    assert _run(['nondecreasing', 'check', '--in', _write(tmp_path, "u.json", up)]) == EXIT_TRUE
    assert capsys.readouterr().out.strip() == "irreducible c=1/1 A={{1,2}}"
    card = SetFunction.by_cardinality(2, lambda k: k)
    assert _run(['nondecreasing', 'check', '--in', _write(tmp_path, "c.json", card)]) == EXIT_FALSE


# --- two-layer / det-experiment / draw ---

def test_two_layer(capsys):
    assert _run(['two-layer', '--n', '4', '--t', '1', '--verify', '--oracle']) == EXIT_TRUE
    assert len(_lines(capsys.readouterr().out)) == 10
    assert _run(['two-layer', '--n', '4', '--t', '3']) == EXIT_ERROR
    assert _run(['two-layer', '--n', '5', '--t', '2', '--oracle']) == EXIT_ERROR


def test_two_layer_oracle_guard_leaves_no_output(tmp_path):
    out = tmp_path / "k5.jsonl"
    assert _run(['two-layer', '--n', '5', '--t', '2', '--oracle', '--out', str(out)]) == EXIT_ERROR
    assert not out.exists()


def test_det_experiment_csv(capsys):
    argv = ['det-experiment', '--N', '3', '--trials', '50', '--seed', '1', '--format', 'csv', '--verify']
    assert _run(argv) == EXIT_TRUE
    header, row = _lines(capsys.readouterr().out)
    assert header == "N,trials,seed,singular_count,max_abs_det"
    assert row.startswith("3,50,1,")


def test_det_experiment_json(tmp_path, capsys):
    out = tmp_path / "det.json"
    assert _run(['det-experiment', '--N', '2', '--trials', '20', '--out', str(out)]) == EXIT_TRUE
    record = json.loads(out.read_text(encoding='utf-8'))
    assert record["kind"] == "det_experiment"
    assert sum(count for _, count in record["histogram"]) == 20
    assert "muestras=20" in capsys.readouterr().out


def test_draw(tmp_path, capsys):
    f = _write(tmp_path, "alpha.json", alpha(3, 1))
    out = tmp_path / "alpha.svg"
    assert _run(['draw', '--in', f, '--out', str(out)]) == EXIT_TRUE
    assert out.exists()
    assert capsys.readouterr().out.strip() == f"polytope -> {out}"
    big = _write(tmp_path, "big.json", alpha(5, 1))
    assert _run(['draw', '--in', big, '--out', str(tmp_path / "big.svg")]) == EXIT_ERROR
