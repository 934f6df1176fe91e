import re

_outcomes = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)$", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        msg = ""
        if report.failed:
            text = str(report.longrepr.reprcrash.message) if hasattr(report.longrepr, "reprcrash") else ""
            msg = text.splitlines()[0] if text else ""
        _outcomes[n] = ("PASS" if report.passed else "FAIL", msg)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        status, msg = _outcomes[n]
        line = f"criterion {n:2d} {status}  {CRITERIA[n][0]}"
        if msg:
            line += f": {msg}"
        terminalreporter.write_line(line)
