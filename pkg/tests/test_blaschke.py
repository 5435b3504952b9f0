import numpy as np
import pytest

from attolab import blaschke_eval, make_blaschke, multiply
from attolab.exceptions import (
    EmptyZeroList,
    NonUnimodularConstant,
    PointOutsideClosedDisk,
    ZeroCapWarning,
    ZeroOutsideCap,
)

from conftest import disk, random_alpha


def test_identity_and_square():
    z = make_blaschke([0], 1)
    assert blaschke_eval(z, 0.5) == pytest.approx(0.5)
    z2 = make_blaschke([0, 0], 1)
    assert blaschke_eval(z2, 0.3 + 0.4j) == pytest.approx((0.3 + 0.4j) ** 2)


def test_eval_at_zero_and_boundary():
    b = make_blaschke([0.5])
    assert abs(blaschke_eval(b, 0.5)) < 1e-15
    assert blaschke_eval(b, 1.0) == pytest.approx(1.0)


@pytest.mark.parametrize(
    "zeros, const, exc",
    [([0.99], 1, ZeroOutsideCap), ([], 1, EmptyZeroList), ([0.1], 1.01, NonUnimodularConstant)],
)
def test_constructor_errors(zeros, const, exc):
    with pytest.raises(exc):
        make_blaschke(zeros, const)


def test_constant_renormalized():
    b = make_blaschke([0.2], (1 + 1e-13) * np.exp(0.3j))
    assert abs(abs(b.const) - 1) < 1e-15


def test_cap_override_warns():
    with pytest.warns(ZeroCapWarning):
        b = make_blaschke([0.97], cap=0.98)
    assert b.degree == 1


def test_point_outside_disk():
    with pytest.raises(PointOutsideClosedDisk):
        blaschke_eval(make_blaschke([0.0]), 1.1)


def test_multiply_concatenates():
    b = multiply(make_blaschke([0, 0]), make_blaschke([0.5]))
    assert b.zeros == (0, 0, 0.5)
    assert b.degree == 3


def test_multiply_matches_pointwise_product(rng):
    b1, b2 = random_alpha(rng, 3), random_alpha(rng, 2)
    w = disk(rng, 50, radius=0.99)
    err = np.abs(blaschke_eval(multiply(b1, b2), w) - blaschke_eval(b1, w) * blaschke_eval(b2, w))
    assert err.max() <= 1e-13


def test_boundary_unimodular_zero_reproduction_schwarz(rng):
    for deg in range(1, 7):
        b = random_alpha(rng, deg)
        theta = 2 * np.pi * np.arange(256) / 256
        assert np.max(np.abs(np.abs(b(np.exp(1j * theta))) - 1)) <= 1e-12
        assert np.max(np.abs(b(np.array(b.zeros)))) <= 1e-12
        assert np.all(np.abs(b(disk(rng, 100))) < 1)
