from collections import OrderedDict

_results = OrderedDict()


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py::test_criterion[" not in report.nodeid:
        return
    props = dict(report.user_properties)
    _results[props.get("criterion")] = (report.passed, props.get("elapsed"), report)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        passed, elapsed, report = _results[n]
        timing = f" in {elapsed:.2f}s" if elapsed is not None else ""
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {n:2d} ({TITLES[n]}){timing}")
