from pathlib import Path

import pytest

from analytical_engine.programs import Coefficients

ROOT = Path(__file__).resolve().parent.parent
AE_DIR = ROOT / "ae_programs"

# a + 2y - 8 = 0, x - y + 1 = 0  ->  x = 2, y = 3
PAPER_SET = Coefficients(1, 2, -8, 1, -1, 1)
# x + y - 3 = 0, x - y + 1 = 0  ->  x = 1, y = 2
SECOND_SET = Coefficients(1, 1, -3, 1, -1, 1)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def paper_set():
    return PAPER_SET


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion for the summary."""

    def _report(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
