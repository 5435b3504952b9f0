"""Finite Blaschke products on the unit disk."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .exceptions import (
    EmptyZeroList,
    NonUnimodularConstant,
    PointOutsideClosedDisk,
    ZeroCapWarning,
    ZeroOutsideCap,
)

ZERO_CAP = 0.95
_CONST_TOL = 1e-12
_DISK_TOL = 1e-12


@dataclass(frozen=True)
class BlaschkeProduct:
    """``c * prod_j (z - a_j) / (1 - conj(a_j) z)``.

    The order of ``zeros`` is significant: it fixes the order of the
    Takenaka-Malmquist basis built on top of this product.
    """

    zeros: tuple[complex, ...]
    const: complex = 1.0 + 0.0j

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        return blaschke_eval(self, z)

    def values(self, z: np.ndarray) -> np.ndarray:
        """Unchecked vectorised evaluation (used on quadrature grids)."""
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.const, dtype=complex)
        # factor by factor, no polynomial expansion
        for a in self.zeros:
            out *= (z - a) / (1.0 - np.conj(a) * z)
        return out


def make_blaschke(
    zeros: Iterable[complex],
    unimodular_const: complex = 1.0,
    *,
    cap: float = ZERO_CAP,
) -> BlaschkeProduct:
    zs = tuple(complex(a) for a in zeros)
    if not zs:
        raise EmptyZeroList("a Blaschke product needs at least one zero")
    if cap > ZERO_CAP:
        warnings.warn(
            f"zero cap raised to {cap}; quadrature and basis conditioning may degrade",
            ZeroCapWarning,
            stacklevel=2,
        )
    if cap >= 1.0:
        raise ZeroOutsideCap("zero cap must be < 1")
    for a in zs:
        if not np.isfinite(a):
            raise ZeroOutsideCap(f"non-finite zero {a!r}")
        if abs(a) > cap:
            raise ZeroOutsideCap(f"|{a}| = {abs(a):.6g} exceeds cap {cap}")
    c = complex(unimodular_const)
    if not np.isfinite(c) or abs(abs(c) - 1.0) > _CONST_TOL:
        raise NonUnimodularConstant(f"|c| = {abs(c)!r} is not 1")
    return BlaschkeProduct(zs, c / abs(c))


def blaschke_eval(b: BlaschkeProduct, z):
    """Evaluate ``b`` at a point (or array of points) of the closed disk."""
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)) or np.any(np.abs(arr) > 1.0 + _DISK_TOL):
        raise PointOutsideClosedDisk(f"point(s) outside the closed unit disk: {z!r}")
    out = b.values(arr)
    return complex(out) if out.ndim == 0 else out


def multiply(b1: BlaschkeProduct, b2: BlaschkeProduct) -> BlaschkeProduct:
    return BlaschkeProduct(b1.zeros + b2.zeros, b1.const * b2.const)


def monomial(n: int) -> BlaschkeProduct:
    """``z**n`` as a Blaschke product."""
    return make_blaschke([0.0] * n)
