import pytest

_LINES = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion.

    Call it as ``criterion(n, title, ok, detail)``; the lines are printed in
    the terminal summary and the boolean is returned for asserting.
    """
    def record(n, title, ok, detail=""):
        _LINES.append((n, title, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, ok, detail in sorted(_LINES, key=lambda t: t[0]):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {title}" + (f"  ({detail})" if detail else ""))
