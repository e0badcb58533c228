import pytest

from qthook.lincomb import LinComb
from qthook.qt import QTRational

ACCEPTANCE_LINES: list = []


def R(text) -> QTRational:
    return QTRational.parse(text) if isinstance(text, str) else QTRational(text)


def lc(pairs) -> LinComb:
    """LinComb from {key: coefficient}; string coefficients are parsed as (q,t)-rationals."""
    return LinComb((k, R(c) if isinstance(c, str) else c) for k, c in dict(pairs).items())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def numpy_backend(monkeypatch):
    """Force the pure-numpy kernels for the duration of a test."""
    from qthook import _kernels
    monkeypatch.setenv("QTHOOK_DISABLE_NUMBA", "1")
    assert _kernels.backend() == "numpy"
    return _kernels
