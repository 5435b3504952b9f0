"""Matrix realisations of operators between model spaces.

Orientation is fixed throughout: ``entries[k, j] = <A e_j^alpha, e_k^beta>``,
so rows index the codomain K_beta and columns the domain K_alpha.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import GridMismatch, ShapeMismatch, SpaceMismatch
from .model_space import (
    CoeffVector,
    ConjugationMatrix,
    OrthonormalBasis,
    conjugate_kernel_coeffs,
    kernel_coeffs,
    project,
)


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    domain: OrthonormalBasis
    codomain: OrthonormalBasis
    entries: np.ndarray

    def __post_init__(self):
        e = np.array(self.entries, dtype=complex)
        if e.shape != (self.codomain.dimension, self.domain.dimension):
            raise ShapeMismatch(
                f"entries shape {e.shape} does not match "
                f"({self.codomain.dimension}, {self.domain.dimension})"
            )
        if not np.all(np.isfinite(e)):
            raise ValueError("operator entries must be finite")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def fro(self) -> float:
        return float(np.linalg.norm(self.entries))

    def adjoint(self) -> "OperatorMatrix":
        return OperatorMatrix(self.codomain, self.domain, self.entries.conj().T)

    def apply(self, v: CoeffVector) -> CoeffVector:
        if not v.space.same_space(self.domain):
            raise SpaceMismatch("vector is not in the operator's domain")
        return CoeffVector(self.codomain, self.entries @ v.coords)

    def with_entries(self, entries) -> "OperatorMatrix":
        return OperatorMatrix(self.domain, self.codomain, entries)


@dataclass(frozen=True)
class SymbolPair:
    """Symbol ``phi = conj(chi) + psi`` with chi in K_alpha and psi in K_beta."""

    chi: CoeffVector
    psi: CoeffVector

    def phi_samples(self) -> np.ndarray:
        if self.chi.space.node_count != self.psi.space.node_count:
            raise GridMismatch("chi and psi are sampled on different grids")
        return self.chi.samples().conj() + self.psi.samples()


def _shared_grid(domain: OrthonormalBasis, codomain: OrthonormalBasis) -> None:
    if domain.node_count != codomain.node_count:
        raise GridMismatch(
            f"bases use different grids ({domain.node_count} vs {codomain.node_count})"
        )


def compressed_shift(basis: OrthonormalBasis) -> OperatorMatrix:
    nodes = basis.grid.nodes
    t = basis.sample_table
    entries = t.conj() @ (t * nodes).T / basis.node_count
    return OperatorMatrix(basis, basis, entries)


def rank_one(u: CoeffVector, v: CoeffVector) -> OperatorMatrix:
    """The tensor ``(u (x) v) f = <f, v> u``."""
    if u.space.node_count != v.space.node_count:
        raise SpaceMismatch("u and v must share a quadrature grid")
    return OperatorMatrix(v.space, u.space, np.outer(u.coords, v.coords.conj()))


def atto_matrix(
    domain: OrthonormalBasis, codomain: OrthonormalBasis, phi_samples
) -> OperatorMatrix:
    """``A_phi f = P_beta(phi f)`` from boundary samples of ``phi``."""
    _shared_grid(domain, codomain)
    phi = np.asarray(phi_samples, dtype=complex)
    if phi.shape != (domain.node_count,):
        raise GridMismatch(f"expected {domain.node_count} samples, got {phi.shape}")
    entries = codomain.sample_table.conj() @ (domain.sample_table * phi).T
    return OperatorMatrix(domain, codomain, entries / domain.node_count)


def atto_from_pair(
    domain: OrthonormalBasis, codomain: OrthonormalBasis, pair: SymbolPair
) -> OperatorMatrix:
    if not (pair.chi.space.same_space(domain) and pair.psi.space.same_space(codomain)):
        raise SpaceMismatch("symbol pair does not match (domain, codomain)")
    return atto_matrix(domain, codomain, pair.phi_samples())


def symbol_defect_pair(
    domain: OrthonormalBasis, codomain: OrthonormalBasis, phi_samples
) -> SymbolPair:
    """``chi = P_alpha(conj(phi))``, ``psi = S_beta P_beta(conj(z) phi)``."""
    _shared_grid(domain, codomain)
    phi = np.asarray(phi_samples, dtype=complex)
    chi = project(domain, phi.conj())
    inner = project(codomain, codomain.grid.nodes.conj() * phi)
    psi = compressed_shift(codomain).apply(inner)
    return SymbolPair(chi, psi)


def modified_shift(basis: OrthonormalBasis, a: complex) -> OperatorMatrix:
    """``S_alpha + a (k_0 (x) conj-kernel_0)``."""
    s = compressed_shift(basis)
    if a == 0:
        return s
    tensor = rank_one(kernel_coeffs(basis, 0.0), conjugate_kernel_coeffs(basis, 0.0))
    return s.with_entries(s.entries + complex(a) * tensor.entries)


def conjugate_flip(
    A: OperatorMatrix, c_dom: ConjugationMatrix, c_cod: ConjugationMatrix
) -> OperatorMatrix:
    """Matrix of the linear map ``f -> C_beta A C_alpha f``.

    With antilinear maps acting as ``x -> C conj(x)``, the composition is
    ``C_beta conj(A) conj(C_alpha)``.
    """
    if not (c_dom.space.same_space(A.domain) and c_cod.space.same_space(A.codomain)):
        raise SpaceMismatch("conjugations do not match the operator's spaces")
    return A.with_entries(c_cod.entries @ A.entries.conj() @ c_dom.entries.conj())
