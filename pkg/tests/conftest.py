import pytest

from outercolor import OuterplaneGraph

_results: list[tuple[str, bool, str]] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    _results.append((criterion, ok, detail))


@pytest.fixture
def diamond():
    return OuterplaneGraph.cycle(4, [(1, 3)])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in sorted(_results):
        terminalreporter.write_line(f"{crit}: {'PASS' if ok else 'FAIL'} {detail}")
