"""Per-criterion PASS/FAIL summary for tests marked ``acceptance``."""

import pytest

_OUTCOMES: dict[int, list[tuple[str, bool]]] = {}
_TITLES: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    n, title = mark.args
    _TITLES[n] = title
    # an expected failure still counts against the criterion
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        passed = rep.passed and not hasattr(rep, "wasxfail")
        _OUTCOMES.setdefault(n, []).append((item.name, passed))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        results = _OUTCOMES[n]
        ok = all(p for _, p in results)
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {_TITLES[n]}"
        failed = [name for name, p in results if not p]
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        tr.write_line(line)
