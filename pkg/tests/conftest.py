import numpy as np
import pytest

from eofbounds import build_envelopes


@pytest.fixture(scope="session")
def tables():
    return {m: build_envelopes(m) for m in range(2, 7)}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
