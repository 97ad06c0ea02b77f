import os

import pytest

from pogarr import ProjectiveLine, build_lattice, dual_hesse, klein, rationals


def rational_arrangement(*coeffs):
    Q = rationals()
    return build_lattice([ProjectiveLine.from_values(Q, *c) for c in coeffs])


def pencil(d):
    # lines through (0:0:1)
    return rational_arrangement(*[(1, i, 0) for i in range(d - 1)], (0, 1, 0))


@pytest.fixture
def triangle():
    return rational_arrangement((1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture(scope="session")
def hesse():
    return dual_hesse()


@pytest.fixture(scope="session")
def klein_arr():
    return klein()


def pytest_collection_modifyitems(config, items):
    if os.environ.get("POGARR_EXTENDED"):
        return
    skip = pytest.mark.skip(reason="extended check; set POGARR_EXTENDED=1 to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


_criteria: dict[int, tuple[str, list[str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    entry = _criteria.setdefault(n, (title, []))
    if rep.when == "call" or rep.outcome != "passed":
        entry[1].append("skip" if rep.skipped else rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, results = _criteria[n]
        ran = [r for r in results if r != "skip"]
        if not ran:
            status = "SKIP"
        else:
            status = "PASS" if all(r == "passed" for r in ran) else "FAIL"
        extra = " (extended part skipped)" if ran and "skip" in results else ""
        terminalreporter.write_line(f"criterion {n} {status}: {title}{extra}")
