import contextlib
import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", parent=settings.get_profile("default"), max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """``with criterion(3, "title"):`` records one PASS/FAIL line."""

    @contextlib.contextmanager
    def run(number, title):
        try:
            yield
        except BaseException as exc:
            line = f"criterion {number:>2}: FAIL  {title} ({type(exc).__name__}: {exc})"
            print(line)
            _ACCEPTANCE.append(line.splitlines()[0])
            raise
        line = f"criterion {number:>2}: PASS  {title}"
        print(line)
        _ACCEPTANCE.append(line)

    return run


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
