import pytest

from smoothwords import enumeration, kernel


@pytest.fixture(params=sorted(kernel.BACKENDS))
def backend(request):
    """Run a test once per available kernel backend."""
    before = kernel.backend_name()
    kernel.use_backend(request.param)
    enumeration.clear_cache()
    yield request.param
    kernel.use_backend(before)
    enumeration.clear_cache()


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
