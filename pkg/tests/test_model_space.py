import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from attolab import (
    boundary_inner_product,
    conjugate_kernel_coeffs,
    conjugation_apply,
    conjugation_matrix,
    eval_function,
    kernel_coeffs,
    make_blaschke,
    project,
    tm_basis,
)
from attolab.blaschke import monomial
from attolab.exceptions import GramTolExceeded, GridMismatch, PointOnBoundary, ZeroCapWarning
from attolab.model_space import default_node_count

from conftest import cnormal, disk, random_alpha


def test_default_node_rule():
    assert default_node_count(1) == 512
    assert default_node_count(6, 6) == 1024
    assert default_node_count(6, 6) >= 64 * 16


@pytest.mark.parametrize("n", [1, 2, 5])
def test_monomial_basis(n):
    basis = tm_basis(monomial(n))
    nodes = basis.grid.nodes
    for k in range(n):
        assert np.max(np.abs(basis.sample_table[k] - nodes**k)) < 1e-14


def test_gram_against_adaptive_quadrature():
    zeros = [0.5, -0.3j]
    basis = tm_basis(make_blaschke(zeros), 512)

    def e(k, z):
        out = np.sqrt(1 - abs(zeros[k]) ** 2) / (1 - np.conj(zeros[k]) * z)
        for a in zeros[:k]:
            out *= (z - a) / (1 - np.conj(a) * z)
        return out

    ref = np.zeros((2, 2), dtype=complex)
    for j in range(2):
        for k in range(2):
            f = lambda t, part: part(e(j, np.exp(1j * t)) * np.conj(e(k, np.exp(1j * t))))
            re = quad(f, 0, 2 * np.pi, args=(np.real,), epsabs=1e-13)[0]
            im = quad(f, 0, 2 * np.pi, args=(np.imag,), epsabs=1e-13)[0]
            ref[k, j] = (re + 1j * im) / (2 * np.pi)
    assert np.max(np.abs(ref - np.eye(2))) < 1e-10
    assert np.max(np.abs(basis.gram() - ref)) < 1e-10


def test_coarse_grid_detected():
    with pytest.warns(ZeroCapWarning):
        alpha = make_blaschke([0.99] * 4, cap=0.995)
    with pytest.raises(GramTolExceeded):
        tm_basis(alpha, 512)


def test_inner_product_basics(z2):
    nodes = z2.grid.nodes
    assert boundary_inner_product(nodes, nodes) == pytest.approx(1)
    assert abs(boundary_inner_product(nodes, np.ones_like(nodes))) < 1e-15
    k = kernel_coeffs(z2, 0.3)
    ks = k.samples()
    assert boundary_inner_product(ks, ks) == pytest.approx(1.09, abs=1e-12)
    with pytest.raises(GridMismatch):
        boundary_inner_product(nodes, nodes[:-1])


def test_kernel_monomial_cases(z2):
    np.testing.assert_allclose(kernel_coeffs(z2, 0).coords, [1, 0], atol=1e-15)
    w = 0.2 - 0.6j
    np.testing.assert_allclose(kernel_coeffs(z2, w).coords, [1, np.conj(w)], atol=1e-15)
    np.testing.assert_allclose(conjugate_kernel_coeffs(z2, 0).coords, [0, 1], atol=1e-14)
    b5 = tm_basis(monomial(5))
    np.testing.assert_allclose(conjugate_kernel_coeffs(b5, 0).coords, np.eye(5)[4], atol=1e-14)
    with pytest.raises(PointOnBoundary):
        kernel_coeffs(z2, 1.0)
    with pytest.raises(PointOnBoundary):
        conjugate_kernel_coeffs(z2, -1j)


def test_kernel_matches_closed_form(rng):
    alpha = random_alpha(rng, 4)
    basis = tm_basis(alpha)
    for w in disk(rng, 10):
        k = kernel_coeffs(basis, w)
        z = disk(rng, 20, radius=0.99)
        closed = (1 - np.conj(alpha(w)) * alpha(z)) / (1 - np.conj(w) * z)
        assert np.max(np.abs(eval_function(k, z) - closed)) < 1e-10
        kt = conjugate_kernel_coeffs(basis, w)
        closed_t = (alpha(z) - alpha(w)) / (z - w)
        assert np.max(np.abs(eval_function(kt, z) - closed_t)) < 1e-10


def test_reproducing_property(rng):
    # oracle: Cauchy integral of the boundary samples
    for _ in range(100):
        basis = tm_basis(random_alpha(rng, int(rng.integers(1, 7))))
        f = basis.vector(cnormal(rng, basis.dimension))
        w = complex(disk(rng, 1)[0])
        nodes = basis.grid.nodes
        cauchy = np.mean(f.samples() * nodes / (nodes - w))
        assert abs(cauchy - f.inner(kernel_coeffs(basis, w))) <= 1e-10
        assert abs(cauchy - f(w)) <= 1e-10


def test_parseval(rng):
    for _ in range(20):
        basis = tm_basis(random_alpha(rng, int(rng.integers(1, 7))))
        f = basis.vector(cnormal(rng, basis.dimension))
        s = f.samples()
        assert abs(boundary_inner_product(s, s).real - f.norm() ** 2) <= 1e-10


def test_projection_examples(z2):
    nodes = z2.grid.nodes
    np.testing.assert_allclose(project(z2, z2.sample_table[0]).coords, [1, 0], atol=1e-14)
    np.testing.assert_allclose(project(z2, nodes.conj()).coords, [0, 0], atol=1e-14)
    np.testing.assert_allclose(project(z2, nodes**2).coords, [0, 0], atol=1e-14)
    with pytest.raises(GridMismatch):
        project(z2, nodes[:10])


def test_projection_self_adjoint_and_idempotent(rng):
    basis = tm_basis(random_alpha(rng, 5))
    h = cnormal(rng, basis.node_count)
    f = basis.vector(cnormal(rng, 5))
    Ph = project(basis, h)
    assert abs(Ph.inner(f) - boundary_inner_product(h, f.samples())) <= 1e-10
    np.testing.assert_allclose(project(basis, Ph.samples()).coords, Ph.coords, atol=1e-10)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_conjugation_monomial_is_antidiagonal(n):
    C = conjugation_matrix(tm_basis(monomial(n)))
    np.testing.assert_allclose(C.entries, np.fliplr(np.eye(n)), atol=1e-14)


def test_conjugation_invariants_and_conjugate_kernel(rng):
    for _ in range(50):
        basis = tm_basis(random_alpha(rng, int(rng.integers(1, 7))))
        C = conjugation_matrix(basis)
        assert max(C.defects().values()) <= 1e-10
        w = complex(disk(rng, 1)[0])
        lhs = conjugation_apply(C, kernel_coeffs(basis, w)).coords
        assert np.max(np.abs(lhs - conjugate_kernel_coeffs(basis, w).coords)) <= 1e-10
        f = basis.vector(cnormal(rng, basis.dimension))
        assert np.max(np.abs(C.apply(C.apply(f)).coords - f.coords)) <= 1e-10


def test_conjugation_matches_boundary_formula(rng):
    # independent route: apply alpha * conj(z) * conj(f) on the grid, compare samples
    alpha = random_alpha(rng, 4)
    basis = tm_basis(alpha)
    f = basis.vector(cnormal(rng, 4))
    nodes = basis.grid.nodes
    direct = alpha.values(nodes) * nodes.conj() * f.samples().conj()
    via_matrix = conjugation_matrix(basis).apply(f).samples()
    assert np.max(np.abs(direct - via_matrix)) < 1e-10


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
             min_size=6, max_size=6)
)
def test_conjugation_antilinear_isometry(vals):
    basis = _HYP_BASIS
    C = conjugation_matrix(basis)
    f, g = basis.vector(vals[:3]), basis.vector(vals[3:])
    assert abs(C.apply(f).inner(C.apply(g)) - g.inner(f)) <= 1e-10 * (1 + f.norm() * g.norm())


_HYP_BASIS = tm_basis(make_blaschke([0.4 + 0.2j, -0.7, 0.1j]))


def test_eval_function_examples(z2):
    w = 0.3 + 0.1j
    z = -0.2 + 0.5j
    assert eval_function(z2.vector([1, np.conj(w)]), z) == pytest.approx(1 + np.conj(w) * z)
    assert eval_function(z2.zero_vector(), z) == 0
    assert eval_function(z2.unit(1), 0) == 0
