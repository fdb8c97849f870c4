"""Collects one pass/fail line per acceptance criterion."""
import pytest

_criteria: dict[str, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    cid, title = marker.args
    entry = _criteria.setdefault(cid, [title, True])
    if report.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria, key=lambda c: int(c[2:])):
        title, ok = _criteria[cid]
        terminalreporter.write_line(f"{cid:<5} {'PASS' if ok else 'FAIL'}  {title}")
