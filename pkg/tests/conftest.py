from collections import defaultdict

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_criteria: dict[int, str] = {}
_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    _criteria[num] = title
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[num].append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        results = _outcomes[num]
        ok = bool(results) and all(results)
        terminalreporter.write_line(
            f"criterion {num}: {'PASS' if ok else 'FAIL'}  {_criteria[num]} ({sum(results)}/{len(results)} checks)")
