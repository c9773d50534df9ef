import time

import pytest

_results: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item.stash_elapsed = time.perf_counter() - start


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    # a criterion split over several tests passes only if all of them do
    previous = _results.get(number)
    elapsed = getattr(item, "stash_elapsed", 0.0)
    if previous is not None:
        status = "FAIL" if "FAIL" in (status, previous[0]) else "PASS"
        elapsed += previous[2]
    _results[number] = (status, title, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        status, title, elapsed = _results[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({elapsed:.1f}s)")
