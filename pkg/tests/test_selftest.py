#!/usr/bin/env python3
"""
Tests de la batería embebida (genperm self-test).
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm import selftest
from GenPerm.errors import ParamOutOfRange
from GenPerm.selftest import CHECKS, run_self_test


def test_big_checks_are_opt_in():
    big = [name for name, _, is_big in CHECKS if is_big]
    assert big == ["rayos n=5: 117978 funciones"]


def test_failures_are_isolated(monkeypatch):
    def boom():
        raise ParamOutOfRange("n=9 fuera de rango")

    monkeypatch.setattr(selftest, 'CHECKS', [
        ("ok", lambda: True, False),
        ("falso", lambda: False, False),
        ("excepción", boom, False),
        ("grande", lambda: True, True),
    ])
    report = run_self_test()
    assert [(r.name, r.passed) for r in report] == [("ok", True), ("falso", False), ("excepción", False)]
    assert report[2].detail == "ParamOutOfRange: n=9 fuera de rango"
    assert len(run_self_test(include_big=True)) == 4


def test_full_battery_passes():
    report = run_self_test()
    failed = [(r.name, r.detail) for r in report if not r.passed]
    assert failed == []
    assert len(report) == len(CHECKS) - 1
