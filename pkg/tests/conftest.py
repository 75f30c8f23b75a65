import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from kacmoody import GCM, build, symmetrize

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")

A2 = [[2, -1], [-1, 2]]
AFFINE = [[2, -2], [-2, 2]]
HYPERBOLIC = [[2, -3], [-3, 2]]
RANK3 = [[2, -2, -1], [-2, 2, -1], [-1, -1, 2]]
ACCEPTANCE_GCMS = {"A2": A2, "affine": AFFINE, "hyperbolic": HYPERBOLIC, "rank3": RANK3}

_ALGEBRAS = {}


def algebra(rows, H):
    """Session-wide memo of built algebras (they are immutable once built)."""
    key = (json.dumps(rows), H)
    if key not in _ALGEBRAS:
        a = GCM(rows)
        _ALGEBRAS[key] = build(a, symmetrize(a), H)
    return _ALGEBRAS[key]


def fixture_path(name):
    return FIXTURES / name


def load_fixture(name):
    with open(FIXTURES / name) as fh:
        return json.load(fh)


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("KM_CACHE_DIR", str(tmp_path / "cache"))


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def acceptance_line(number):
    ok, detail = ACCEPTANCE[number]
    return f"acceptance {number}: {'PASS' if ok else 'FAIL'}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(acceptance_line(number))
