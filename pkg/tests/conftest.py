"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    report = outcome.get_result()
    number, title = marker.args
    # any failing phase (setup, call, teardown) fails the criterion
    if report.failed:
        _results[number] = (title, "FAIL")
    elif report.when == "call":
        _results.setdefault(number, (title, "PASS"))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, verdict = _results[number]
        terminalreporter.write_line(f"AC{number:<2} {verdict}  {title}")
