from pathlib import Path

import pytest

from lpod.logic import Interpretation
from lpod.syntax import parse_program

PROGRAMS = Path(__file__).resolve().parent.parent / "programs"

# (criterion number, title, passed, detail) appended by test_acceptance
ACCEPTANCE_LINES = []


def prog(text):
    return parse_program(text)


def interp(program, **values):
    """Interpretation over the program's literals; strong negation is spelled ``neg_<atom>``."""
    mapping = {(f"-{k[4:]}" if k.startswith("neg_") else k): v for k, v in values.items()}
    return Interpretation.from_mapping(program.sigma, mapping)


def load(name):
    return parse_program((PROGRAMS / name).read_text())


@pytest.fixture
def programs_dir():
    return PROGRAMS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}: {detail}")
