import os

# every LP outcome in the test run is re-checked by the certificate verifier
os.environ["AFFHIT_AUDIT"] = "1"

import pytest  # noqa: E402

import families  # noqa: E402


@pytest.fixture
def f1():
    return families.f1()


@pytest.fixture
def f2():
    return families.f2()


@pytest.fixture
def f3():
    return families.f3()


@pytest.fixture
def f3_bounded():
    return families.f3_bounded()


@pytest.fixture
def f4():
    return families.f4()


@pytest.fixture
def f4_boxed():
    return families.f4(box=((-2, 2), (-1, 1)))


# -- acceptance report ----------------------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion with a summary line")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or report.failed:
        number, title = crit
        prev = _CRITERIA.get(number)
        ok = report.passed and (prev is None or prev[1])
        _CRITERIA[number] = (title, ok, report.duration)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, duration = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({duration:.2f}s)")
