"""Test-session plumbing: print one PASS/FAIL line per acceptance criterion."""

_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    module = report.nodeid.split("::")[0]
    if not module.endswith("test_acceptance.py"):
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance_results[name] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _acceptance_results[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results.items():
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}")
