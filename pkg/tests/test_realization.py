import pytest

from engine.errors import DescriptorError
from engine.lie.realization import (
    RealFormDescriptor,
    build_real_form,
    hermitian_gram,
    is_positive_definite,
    killing_gram,
)
from engine.math.mat import ExactMatrix
from engine.math.scalar import ExactScalar


@pytest.mark.parametrize(
    "text, name",
    [("sl_R(4)", "sl_R(4)"), ("sl(4,R)", "sl_R(4)"), ("su(6,3)", "su(6,3)")],
)
def test_parse_descriptor(text, name):
    assert RealFormDescriptor.parse(text).name == name


def test_parse_table_descriptor():
    assert RealFormDescriptor.parse({"family": "su", "p": 2, "q": 1}) == RealFormDescriptor.su(2, 1)


@pytest.mark.parametrize("bad", ["sl_R(1)", "su(1,2)", "so(5)", {"family": "sp", "n": 4}])
def test_invalid_descriptor(bad):
    with pytest.raises(DescriptorError):
        RealFormDescriptor.parse(bad)


def test_dimensions(sl4, su21):
    assert (sl4.dim, sl4.dim_k, sl4.dim_p) == (15, 6, 9)
    assert (su21.dim, su21.dim_k, su21.dim_p) == (8, 4, 4)


@pytest.mark.slow
def test_su63_dimensions():
    r = build_real_form(RealFormDescriptor.su(6, 3))
    assert (r.dim_k, r.dim_p) == (44, 36)


def test_killing_form_sl2(sl2):
    h = sl2.basis_element(sl2.dim - 1)
    assert sl2.to_matrix(h) == ExactMatrix.diagonal([1, -1])
    assert sl2.killing_form(h, h) == 8


def test_brackets_match_matrices(sl4):
    for i in range(sl4.dim):
        for j in range(sl4.dim):
            a, b = sl4.basis_element(i), sl4.basis_element(j)
            expected = sl4.to_matrix(a).bracket(sl4.to_matrix(b))
            assert sl4.to_matrix(sl4.bracket(a, b)) == expected


def test_cartan_decomposition(sl4, su21):
    for r in (sl4, su21):
        for i in r.k_indices:
            z = r.basis_element(i)
            assert r.theta(z) == z
        for i in r.p_indices:
            z = r.basis_element(i)
            assert r.theta(z) == tuple(-c for c in z)


def test_hermitian_form_is_positive_definite(sl4, su21):
    for r in (sl4, su21):
        assert is_positive_definite(hermitian_gram(r))


def test_killing_form_is_symmetric(su21):
    gram = killing_gram(su21)
    n = len(gram)
    assert all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))


def test_weyl_involution_is_an_involution_commuting_with_theta(sl4, su21):
    for r in (sl4, su21):
        for i in range(r.dim):
            z = r.basis_element(i)
            assert r.nu(r.nu(z)) == z
            assert r.nu(r.theta(z)) == r.theta(r.nu(z))


def test_weyl_involution_is_an_automorphism(sl4, su21):
    for r in (sl4, su21):
        basis = [r.basis_element(i) for i in range(r.dim)]
        images = [r.nu(z) for z in basis]
        for a, nu_a in zip(basis, images):
            for b, nu_b in zip(basis, images):
                assert r.nu(r.bracket(a, b)) == r.bracket(nu_a, nu_b)


def test_weight_rank(sl4, sl6, su21):
    assert (sl4.weight_rank, sl6.weight_rank, su21.weight_rank) == (2, 3, 3)


def test_coordinates_reject_outside_matrix(sl4):
    outside = ExactMatrix.identity(4)
    assert not sl4.contains(outside)
    assert sl4.contains(ExactMatrix.unit(4, 0, 1, ExactScalar(0, 1)) + ExactMatrix.unit(4, 1, 0, ExactScalar(0, 1)))


def _add(z, w):
    return tuple(a + b for a, b in zip(z, w))


def test_jacobi_identity(sl4, su21):
    for r in (sl4, su21):
        basis = [r.basis_element(i) for i in range(r.dim)]
        for i, a in enumerate(basis):
            for j in range(i + 1, r.dim):
                b = basis[j]
                ab = r.bracket(a, b)
                for c in basis[j + 1:]:
                    total = _add(
                        _add(r.bracket(a, r.bracket(b, c)), r.bracket(b, r.bracket(c, a))),
                        r.bracket(c, ab),
                    )
                    assert total == r.zero()


def _complex_samples(r):
    weight = ExactScalar(1, 2)
    out = [r.basis_element(i) for i in range(r.dim)]
    out += [tuple(c * weight for c in r.basis_element(i)) for i in range(0, r.dim, 3)]
    return out


def test_conjugations_commute_and_square_to_identity(sl4, su21):
    for r in (sl4, su21):
        for z in _complex_samples(r):
            theta, sigma, tau = r.theta(z), r.sigma(z), r.tau(z)
            assert r.theta(theta) == z
            assert r.sigma(sigma) == z
            assert r.tau(tau) == z
            assert r.theta(sigma) == r.sigma(theta)
            assert r.theta(tau) == r.tau(theta)
            assert r.sigma(tau) == r.tau(sigma)
            assert r.theta(sigma) == tau


def test_sigma_is_conjugate_linear(sl4, su21):
    i = ExactScalar(0, 1)
    for r in (sl4, su21):
        z = r.basis_element(r.dim - 1)
        assert r.sigma(tuple(i * c for c in z)) == tuple(-i * c for c in r.sigma(z))
    # the split form is fixed by sigma on its real basis
    assert all(sl4.sigma(sl4.basis_element(k)) == sl4.basis_element(k) for k in range(sl4.dim))


def test_killing_form_is_theta_invariant(sl4, su21):
    for r in (sl4, su21):
        basis = [r.basis_element(i) for i in range(r.dim)]
        thetas = [r.theta(z) for z in basis]
        gram = killing_gram(r)
        assert killing_gram(r, thetas) == gram


def test_k_and_p_are_killing_orthogonal(sl4, su21):
    for r in (sl4, su21):
        gram = killing_gram(r)
        assert all(gram[i][j].is_zero() for i in r.k_indices for j in r.p_indices)


def test_bracket_of_matrices(sl4, example_matrices):
    y1, y2, y3 = example_matrices
    assert sl4.bracket_matrices(y1, y2) == sl4.zero()
    assert sl4.bracket_matrices(y1, y3) == sl4.bracket(sl4.coordinates(y1), sl4.coordinates(y3))


def test_example_matrices_lie_in_p(sl4, example_matrices):
    for y in example_matrices:
        z = sl4.coordinates(y)
        assert sl4.in_p(z)
        assert sl4.theta(z) == tuple(-c for c in z)
    y1, y2, _ = example_matrices
    assert y1.is_nilpotent()
    assert (y1 + y2).is_nilpotent()
