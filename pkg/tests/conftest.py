import pytest

from proxrem.util.log import set_quiet, set_verbose


@pytest.fixture(autouse=True)
def _reset_console_flags():
    """In-process CLI runs (e.g. ``run(["-q", ...])``) leave the module-global
    quiet/verbose flags set; reset them so tests do not depend on order."""
    set_quiet(False)
    set_verbose(False)
    yield
    set_quiet(False)
    set_verbose(False)
