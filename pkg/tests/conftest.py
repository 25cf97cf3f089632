"""Collect one verdict per acceptance criterion and print them after the run."""

import pytest

_VERDICTS: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def verdict():
    """Record ``(number, title, passed, detail)`` for the summary table."""

    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        _VERDICTS[number] = (title, bool(passed), detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_VERDICTS):
        title, passed, detail = _VERDICTS[number]
        line = f"[{'PASS' if passed else 'FAIL'}] {number}. {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
