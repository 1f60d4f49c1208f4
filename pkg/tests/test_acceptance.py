"""Acceptance checks: one [PASS]/[FAIL] line per criterion, plus [info] lines.

Run with ``pytest -s tests/test_acceptance.py`` to see the report.
"""
import pytest

from schurasym.suites import SUITES, run_suite

from conftest import ACCEPTANCE_LINES

_CACHE = {}


def report(name):
    if name not in _CACHE:
        _CACHE[name] = run_suite(name)
        for c in _CACHE[name].checks:
            print(c.line())
            ACCEPTANCE_LINES.append(c.line())
    return _CACHE[name]


def primary(name):
    return [c for c in report(name).checks if not c.supplementary]


@pytest.mark.slow
@pytest.mark.parametrize("suite", list(SUITES))
def test_criteria(suite):
    failed = [c.line() for c in primary(suite) if not c.passed]
    assert not failed, "\n".join(failed)
