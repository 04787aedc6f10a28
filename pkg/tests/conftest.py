import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): an exit criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker and call.when == "call":
        _criteria.append((marker.args[0], call.excinfo is None, call.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, seconds in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({seconds:.2f}s)")
