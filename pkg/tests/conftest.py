import pytest

_RESULTS_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion.

    Usage: ``criterion(number, title, ok)``; the assertion is made here so a
    failing criterion both fails the test and shows up as FAIL in the summary.
    """
    results = request.config.stash[_RESULTS_KEY]

    def record(number: int, title: str, ok: bool, detail: str = ""):
        results.append((number, title, bool(ok), detail))
        assert ok, f"criterion {number} ({title}) failed {detail}".rstrip()

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS_KEY, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(results, key=lambda r: r[0]):
        line = f"[{number:2d}] {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
