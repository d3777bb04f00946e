import sys
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

N_CRITERIA = 11
_outcomes: dict[int, list[tuple[str, bool]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        _outcomes[mark.args[0]].append((item.name, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, N_CRITERIA + 1):
        results = _outcomes.get(n)
        if not results:
            terminalreporter.write_line(f"criterion {n:2d}: NOT RUN")
            continue
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        suffix = f"  ({', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n:2d}: {status}{suffix}")
