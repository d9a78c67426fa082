"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""
import pytest

_outcomes: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not report.failed:
        return
    number, title = mark.args
    reason = ""
    if report.failed and getattr(report.longrepr, "reprcrash", None) is not None:
        reason = report.longrepr.reprcrash.message.splitlines()[0]
    status = "PASS" if report.passed else "FAIL"
    if number not in _outcomes or status == "FAIL":
        _outcomes[number] = (status, title, reason)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        status, title, reason = _outcomes[number]
        line = f"criterion {number:2d} {status}  {title}"
        if reason:
            line += f"  [{reason[:160]}]"
        terminalreporter.write_line(line)
    passed = sum(1 for s, _, _ in _outcomes.values() if s == "PASS")
    terminalreporter.write_line(f"{passed}/{len(_outcomes)} criteria pass")
