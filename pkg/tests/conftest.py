import time

import pytest

from catalan_cf.patternclass import class_members

_LINES: list[str] = []


def pytest_runtest_logreport(report):
    if report.when == "call":
        _LINES.extend(v for k, v in report.user_properties if k == "acceptance")


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance(request):
    """Call with (number, title, limit_s, check); records and prints a PASS/FAIL line."""

    def run(number, title, limit, check):
        class_members.cache_clear()  # time each criterion from a cold cache
        start = time.perf_counter()
        ok, detail = check()
        elapsed = time.perf_counter() - start
        in_time = elapsed < limit
        status = "PASS" if ok and in_time else "FAIL"
        line = f"{status}  [{number:02d}] {title}  ({elapsed:.2f} s, limit {limit} s)"
        if not ok:
            line += f"  {detail}"
        elif not in_time:
            line += "  too slow"
        request.node.user_properties.append(("acceptance", line))
        print(line)
        assert ok, detail
        assert in_time, f"{elapsed:.2f} s exceeds {limit} s"

    return run
