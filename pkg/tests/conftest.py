import numpy as np
import pytest

from attolab import basis_pair, make_blaschke, tm_basis
from attolab.blaschke import monomial


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def cnormal(rng, size):
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)


def disk(rng, n, radius=0.9):
    return radius * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


def random_alpha(rng, deg):
    return make_blaschke(disk(rng, deg), np.exp(2j * np.pi * rng.random()))


@pytest.fixture
def z2():
    return tm_basis(monomial(2))


@pytest.fixture
def z2z3():
    """(K_{z^2}, K_{z^3}) on one grid."""
    return basis_pair(monomial(2), monomial(3))


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
