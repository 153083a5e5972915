import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line; reported in the terminal summary."""

    def record(label, ok, detail="", skipped=False):
        status = "SKIP" if skipped else "PASS" if ok else "FAIL"
        _ACCEPTANCE.append((label, status, detail))
        print(f"[{status}] {label} {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {label}  {detail}")
