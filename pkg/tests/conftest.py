import pytest

_criteria: dict[int, list[tuple[str, str, str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        details = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        _criteria.setdefault(marker.args[0], []).append((item.name, report.outcome, details))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        runs = _criteria[number]
        ok = all(outcome == "passed" for _, outcome, _ in runs)
        failed = [name for name, outcome, _ in runs if outcome != "passed"]
        details = " | ".join(d for _, _, d in runs if d)
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}"
        if failed:
            line += f" (failed: {', '.join(failed)})"
        if details:
            line += f" -- {details}"
        terminalreporter.write_line(line)
