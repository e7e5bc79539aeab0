import re
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("kaj", deadline=None)
settings.load_profile("kaj")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def paper_ciphertext_bytes():
    return (FIXTURES / "environment.kajc").read_bytes()


@pytest.fixture
def paper_key_bytes():
    return (FIXTURES / "environment.kajk").read_bytes()


_AC_NAME = re.compile(r"test_acceptance\.py::test_ac(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", None) != "call":
                continue
            match = _AC_NAME.search(report.nodeid)
            if match:
                lines.append((int(match.group(1)), outcome, match.group(2).replace("_", " ")))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, outcome, name in sorted(lines):
        terminalreporter.write_line(f"AC{number} {'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
