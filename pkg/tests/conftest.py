from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture
def criterion():
    """Record a named acceptance criterion's outcome for the terminal summary."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[name] = ("PASS" if ok else "FAIL") + (f"  {detail}" if detail else "")
        print(f"{name}: {'PASS' if ok else 'FAIL'} {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(f"{name}: {ACCEPTANCE_RESULTS[name]}")
