import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if marker not in report.nodeid:
        return
    number = int(report.nodeid.split(marker)[1].split("_")[0])
    title = report.nodeid.split(marker)[1].split("[")[0].split("_", 1)[1].replace("_", " ")
    if report.when == "call" or report.outcome != "passed":
        previous = _criteria.get(number, ("PASS", title))[0]
        verdict = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"
        _criteria[number] = (verdict, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        verdict, title = _criteria[number]
        terminalreporter.write_line(f"{verdict}  criterion {number:>2}: {title}")
