import time

import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Records PASS/FAIL for an acceptance criterion and enforces its time bound."""
    marker = request.node.get_closest_marker("criterion")
    number, title, bound = marker.args
    start = time.perf_counter()
    ACCEPTANCE[number] = (title, "FAIL", None)
    yield
    elapsed = time.perf_counter() - start
    in_time = elapsed <= bound
    passed = in_time and not getattr(request.node, "call_failed", True)
    ACCEPTANCE[number] = (title, "PASS" if passed else "FAIL", elapsed)
    assert in_time, "took %.1fs, bound %ss" % (elapsed, bound)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_failed = rep.failed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, seconds): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status, elapsed = ACCEPTANCE[number]
        t = "" if elapsed is None else " (%.2fs)" % elapsed
        terminalreporter.write_line("%s criterion %2d: %s%s" % (status, number, title, t))
