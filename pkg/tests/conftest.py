import pytest
from hypothesis import HealthCheck, settings

from semimodlat import FreeSemimodule, builtin

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# criterion number -> (passed, detail); filled in by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def bool2():
    return FreeSemimodule(builtin("bool"), 2)


@pytest.fixture(scope="session")
def z4_2():
    return FreeSemimodule(builtin("z4"), 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}  {detail}")
