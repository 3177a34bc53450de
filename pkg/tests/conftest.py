from __future__ import annotations

import pytest

CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record the one-line verdict of an acceptance criterion."""

    def record(number: int, title: str, failures: list[str], detail: str = "") -> None:
        verdict = "PASS" if not failures else "FAIL"
        extra = "; ".join(failures) if failures else detail
        CRITERIA[number] = f"criterion {number} [{verdict}] {title}" + (f": {extra}" if extra else "")
        print(CRITERIA[number])

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
