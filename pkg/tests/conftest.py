import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, float]] = []


@pytest.fixture
def record_criterion():
    """Call as record_criterion(number, title, passed, seconds)."""
    def record(num, title, passed, seconds):
        ACCEPTANCE_RESULTS.append((num, title, passed, seconds))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, seconds in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {title} ({seconds:.1f}s)")
