import functools

import pytest

from rooklab.bitrule import build_rook_digraph
from rooklab.satenc import find_external_solver

_ACCEPTANCE = pytest.StashKey[list]()


@functools.lru_cache(maxsize=16)
def rook(n):
    return build_rook_digraph(n)


@pytest.fixture(scope="session")
def sat_solver():
    cmd = find_external_solver()
    if cmd is None:
        pytest.skip("no external SAT solver available")
    return cmd


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line)
