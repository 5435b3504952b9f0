"""Model spaces K_alpha = H^2 (-) alpha H^2 for finite Blaschke products.

Elements are stored as coordinates in the Takenaka-Malmquist basis, and every
inner product is a trapezoid rule over the N-th roots of unity.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blaschke import BlaschkeProduct
from .exceptions import (
    GramTolExceeded,
    GridMismatch,
    PointOnBoundary,
    PointOutsideClosedDisk,
    SpaceMismatch,
    ToleranceExceeded,
)

MIN_NODES = 512
CONSTRUCTION_TOL = 1e-10


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def default_node_count(deg_alpha: int, deg_beta: int = 0) -> int:
    """Smallest power of two >= 64 * (deg_alpha + deg_beta + 4), at least 512."""
    need = 64 * (deg_alpha + deg_beta + 4)
    n = 1 << max(0, (need - 1).bit_length())
    return max(MIN_NODES, n)


@dataclass(frozen=True, eq=False)
class BoundaryGrid:
    node_count: int
    nodes: np.ndarray = field(repr=False)

    @classmethod
    def uniform(cls, node_count: int) -> "BoundaryGrid":
        if not _is_pow2(node_count) or node_count < MIN_NODES:
            raise ValueError(f"node_count must be a power of two >= {MIN_NODES}, got {node_count}")
        nodes = np.exp(2j * np.pi * np.arange(node_count) / node_count)
        nodes.setflags(write=False)
        return cls(node_count, nodes)

    @property
    def weight(self) -> float:
        return 1.0 / self.node_count


def boundary_inner_product(f_samples, g_samples) -> complex:
    """Trapezoid approximation of ``(1/2pi) * int f conj(g) dtheta``."""
    f = np.asarray(f_samples, dtype=complex)
    g = np.asarray(g_samples, dtype=complex)
    if f.shape != g.shape or f.ndim != 1:
        raise GridMismatch(f"sample shapes differ: {f.shape} vs {g.shape}")
    return complex(np.vdot(g, f) / f.shape[0])


def tm_values(zeros, z) -> np.ndarray:
    """Takenaka-Malmquist functions at the points ``z``; shape (len(zeros), len(z))."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.empty((len(zeros), z.size), dtype=complex)
    prefix = np.ones(z.size, dtype=complex)
    for k, a in enumerate(zeros):
        ac = np.conj(a)
        out[k] = np.sqrt(1.0 - abs(a) ** 2) / (1.0 - ac * z) * prefix
        prefix = prefix * (z - a) / (1.0 - ac * z)
    return out


@dataclass(frozen=True, eq=False)
class OrthonormalBasis:
    alpha: BlaschkeProduct
    grid: BoundaryGrid
    sample_table: np.ndarray = field(repr=False)

    @property
    def dimension(self) -> int:
        return self.alpha.degree

    @property
    def node_count(self) -> int:
        return self.grid.node_count

    def same_space(self, other: "OrthonormalBasis") -> bool:
        return self is other or (
            self.alpha == other.alpha and self.node_count == other.node_count
        )

    def gram(self) -> np.ndarray:
        t = self.sample_table
        return t.conj() @ t.T / self.node_count

    def values(self, z) -> np.ndarray:
        return tm_values(self.alpha.zeros, z)

    def synthesize(self, coords) -> np.ndarray:
        """Boundary samples of ``sum_j coords[j] e_j``."""
        return np.asarray(coords, dtype=complex) @ self.sample_table

    def vector(self, coords) -> "CoeffVector":
        return CoeffVector(self, coords)

    def zero_vector(self) -> "CoeffVector":
        return CoeffVector(self, np.zeros(self.dimension, dtype=complex))

    def unit(self, j: int) -> "CoeffVector":
        c = np.zeros(self.dimension, dtype=complex)
        c[j] = 1.0
        return CoeffVector(self, c)


def tm_basis(alpha: BlaschkeProduct, node_count: int | None = None) -> OrthonormalBasis:
    if node_count is None:
        node_count = default_node_count(alpha.degree)
    grid = BoundaryGrid.uniform(node_count)
    table = tm_values(alpha.zeros, grid.nodes)
    table.setflags(write=False)
    basis = OrthonormalBasis(alpha, grid, table)
    err = np.max(np.abs(basis.gram() - np.eye(basis.dimension)))
    if err > CONSTRUCTION_TOL:
        raise GramTolExceeded(f"Gram error {err:.3e} with {node_count} nodes")
    return basis


def basis_pair(
    alpha: BlaschkeProduct, beta: BlaschkeProduct, node_count: int | None = None
) -> tuple[OrthonormalBasis, OrthonormalBasis]:
    """Bases for K_alpha and K_beta on one shared grid."""
    if node_count is None:
        node_count = default_node_count(alpha.degree, beta.degree)
    return tm_basis(alpha, node_count), tm_basis(beta, node_count)


class CoeffVector:
    """An element of a model space, stored as orthonormal-basis coordinates."""

    __slots__ = ("space", "coords")

    def __init__(self, space: OrthonormalBasis, coords):
        c = np.array(coords, dtype=complex).reshape(-1)
        if c.shape != (space.dimension,):
            raise SpaceMismatch(
                f"expected {space.dimension} coordinates, got {c.shape[0]}"
            )
        c.setflags(write=False)
        self.space = space
        self.coords = c

    def __repr__(self):
        return f"CoeffVector(dim={self.space.dimension}, coords={self.coords!r})"

    def samples(self) -> np.ndarray:
        return self.space.synthesize(self.coords)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def inner(self, other: "CoeffVector") -> complex:
        if not self.space.same_space(other.space):
            raise SpaceMismatch("vectors live in different model spaces")
        return complex(np.vdot(other.coords, self.coords))

    def __call__(self, z):
        return eval_function(self, z)

    def __add__(self, other):
        if not self.space.same_space(other.space):
            raise SpaceMismatch("vectors live in different model spaces")
        return CoeffVector(self.space, self.coords + other.coords)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, scalar):
        return CoeffVector(self.space, self.coords * complex(scalar))

    __rmul__ = __mul__


def eval_function(v: CoeffVector, z):
    arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(arr) > 1.0 + 1e-12):
        raise PointOutsideClosedDisk(f"point(s) outside the closed unit disk: {z!r}")
    vals = v.coords @ v.space.values(arr.reshape(-1))
    return complex(vals[0]) if arr.ndim == 0 else vals.reshape(arr.shape)


def _check_interior(w) -> complex:
    w = complex(w)
    if not abs(w) < 1.0 - 1e-9:
        raise PointOnBoundary(f"|w| = {abs(w)!r} is not inside the open disk")
    return w


def project(basis: OrthonormalBasis, h_samples) -> CoeffVector:
    """Orthogonal projection of boundary samples onto K_alpha."""
    h = np.asarray(h_samples, dtype=complex)
    if h.shape != (basis.node_count,):
        raise GridMismatch(f"expected {basis.node_count} samples, got {h.shape}")
    return CoeffVector(basis, basis.sample_table.conj() @ h / basis.node_count)


def kernel_coeffs(basis: OrthonormalBasis, w) -> CoeffVector:
    """Reproducing kernel k_w: coordinates are ``conj(e_j(w))``."""
    w = _check_interior(w)
    return CoeffVector(basis, basis.values(w)[:, 0].conj())


def kernel_closed_form(alpha: BlaschkeProduct, w, z) -> np.ndarray:
    w = complex(w)
    z = np.asarray(z, dtype=complex)
    return (1.0 - np.conj(alpha.values(w)) * alpha.values(z)) / (1.0 - np.conj(w) * z)


def conjugate_kernel_closed_form(alpha: BlaschkeProduct, w, z) -> np.ndarray:
    w = complex(w)
    z = np.asarray(z, dtype=complex)
    return (alpha.values(z) - alpha.values(w)) / (z - w)


def conjugate_kernel_coeffs(basis: OrthonormalBasis, w) -> CoeffVector:
    """Conjugate kernel ``(alpha(z) - alpha(w)) / (z - w)`` projected onto the basis.

    Only boundary nodes are sampled, so ``z == w`` never occurs for interior ``w``.
    """
    w = _check_interior(w)
    samples = conjugate_kernel_closed_form(basis.alpha, w, basis.grid.nodes)
    return project(basis, samples)


@dataclass(frozen=True, eq=False)
class ConjugationMatrix:
    """Antilinear map ``f -> entries @ conj(coords(f))``."""

    space: OrthonormalBasis
    entries: np.ndarray

    def apply(self, v: CoeffVector) -> CoeffVector:
        return conjugation_apply(self, v)

    def defects(self) -> dict[str, float]:
        c = self.entries
        eye = np.eye(c.shape[0])
        return {
            "unitary": float(np.max(np.abs(c.conj().T @ c - eye))),
            "symmetric": float(np.max(np.abs(c - c.T))),
            "involution": float(np.max(np.abs(c @ c.conj() - eye))),
        }


def conjugation_matrix(basis: OrthonormalBasis) -> ConjugationMatrix:
    nodes = basis.grid.nodes
    # C e_j = alpha * conj(z) * conj(e_j) on the circle
    images = basis.alpha.values(nodes) * nodes.conj() * basis.sample_table.conj()
    entries = basis.sample_table.conj() @ images.T / basis.node_count
    entries.setflags(write=False)
    cm = ConjugationMatrix(basis, entries)
    bad = {k: v for k, v in cm.defects().items() if v > CONSTRUCTION_TOL}
    if bad:
        raise ToleranceExceeded(f"conjugation invariants violated: {bad}")
    return cm


def conjugation_apply(c: ConjugationMatrix, v: CoeffVector) -> CoeffVector:
    if not c.space.same_space(v.space):
        raise SpaceMismatch("conjugation and vector live in different spaces")
    return CoeffVector(v.space, c.entries @ v.coords.conj())
