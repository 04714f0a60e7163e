"""Matrices, Hermitian forms and subspace calculus over Q(i, sqrt2)."""

import pytest

from qktoledo import (FieldElem, HermSig, Matrix, Subspace, herm_form,
                      ZERO, ONE, I, SQRT2, su21_p_matrix)

from _helpers import rng, rand_gauss, rand_field_elem

SIG21 = HermSig(2, 1)
SIG42 = HermSig(4, 2)


def unit(n, k):
    return tuple(ONE if i == k else ZERO for i in range(n))


def test_matrix_basics():
    assert Matrix.identity(3).trace() == FieldElem(3)
    col = Matrix([[I], [SQRT2]])
    assert col.conj_transpose() == Matrix([[-I, SQRT2]])
    with pytest.raises(ValueError):
        Matrix([[ONE, ZERO]]).trace()
    with pytest.raises(ValueError):
        Matrix([[ONE]]) @ Matrix([[ONE, ZERO], [ZERO, ONE], [ONE, ONE]])


def test_su21_basis_product():
    # hand-computed: X @ Y = diag(-i, 0, i) for the first two pair basis elements
    x = su21_p_matrix(ONE, ZERO)
    y = su21_p_matrix(I, ZERO)
    assert x @ y == Matrix.diagonal([-I, ZERO, I])
    assert y @ x == Matrix.diagonal([I, ZERO, -I])


def test_herm_form_values():
    assert herm_form(unit(3, 2), unit(3, 2), SIG21) == FieldElem(-1)
    assert herm_form(unit(3, 0), unit(3, 2), SIG21) == ZERO
    assert herm_form(unit(6, 4), unit(6, 4), SIG42) == FieldElem(-1)
    with pytest.raises(ValueError):
        herm_form(unit(3, 0), unit(6, 0), SIG21)


def test_herm_form_conjugate_symmetry():
    r = rng(201)
    for _ in range(200):
        u = tuple(rand_field_elem(r) for _ in range(3))
        v = tuple(rand_field_elem(r) for _ in range(3))
        assert herm_form(u, v, SIG21) == herm_form(v, u, SIG21).conj()


def test_perp_examples():
    s = Subspace.span(3, [unit(3, 2)])
    assert s.perp(SIG21) == Subspace.span(3, [unit(3, 0), unit(3, 1)])


def test_definiteness_examples():
    assert Subspace.span(6, [unit(6, 4), unit(6, 5)]).definiteness(SIG42) == "negative"
    assert Subspace.span(6, [unit(6, 0), unit(6, 1), unit(6, 3)]).definiteness(SIG42) == "positive"
    mixed = Subspace.span(6, [unit(6, 0), unit(6, 4)])
    assert mixed.definiteness(SIG42) == "indefinite"
    # isotropic line: degenerate restriction
    iso = Subspace.span(6, [tuple(x + y for x, y in zip(unit(6, 0), unit(6, 4)))])
    assert iso.definiteness(SIG42) == "degenerate"
    # hyperbolic plane spanned by isotropic vectors: zero diagonal, indefinite
    e_plus = tuple(x + y for x, y in zip(unit(6, 0), unit(6, 4)))
    e_minus = tuple(x - y for x, y in zip(unit(6, 0), unit(6, 4)))
    assert Subspace.span(6, [e_plus, e_minus]).definiteness(SIG42) == "indefinite"


def test_inertia_of_full_space():
    full = Subspace.span(6, [unit(6, k) for k in range(6)])
    assert full.inertia(SIG42) == (4, 2, 0)


def _random_subspace(r, ambient=6, max_dim=5):
    d = r.randint(1, max_dim)
    vecs = [tuple(rand_gauss(r) for _ in range(ambient)) for _ in range(d)]
    return Subspace.span(ambient, vecs)


def test_membership_invariant_under_recombination():
    r = rng(202)
    for _ in range(50):
        s = _random_subspace(r)
        if s.dim == 0:
            continue
        # random invertible recombination of the spanning set
        while True:
            coeffs = [[rand_gauss(r) for _ in range(s.dim)] for _ in range(s.dim)]
            recombined = []
            for row in coeffs:
                v = tuple(ZERO for _ in range(6))
                for c, b in zip(row, s.basis):
                    v = tuple(x + c * y for x, y in zip(v, b))
                recombined.append(v)
            s2 = Subspace.span(6, recombined)
            if s2.dim == s.dim:
                break
        assert s2 == s
        probe = tuple(rand_gauss(r) for _ in range(6))
        assert s.contains(probe) == s2.contains(probe)
        inside = s.basis[0]
        assert s2.contains(inside)


def test_perp_involution_and_dimension():
    r = rng(203)
    trials = 0
    while trials < 50:
        s = _random_subspace(r)
        assert s.dim + s.perp(SIG42).dim == 6
        if s.definiteness(SIG42) == "degenerate":
            continue
        trials += 1
        assert s.perp(SIG42).perp(SIG42) == s


def test_residue_is_linear_and_canonical():
    r = rng(204)
    s = _random_subspace(r, max_dim=3)
    for _ in range(50):
        u = tuple(rand_gauss(r) for _ in range(6))
        v = tuple(rand_gauss(r) for _ in range(6))
        sum_res = s.residue(tuple(x + y for x, y in zip(u, v)))
        res_sum = tuple(x + y for x, y in zip(s.residue(u), s.residue(v)))
        assert sum_res == res_sum
        assert s.residue(s.residue(u)) == s.residue(u)
        assert s.contains(tuple(x - y for x, y in zip(u, s.residue(u))))


def test_subspace_sum():
    a = Subspace.span(6, [unit(6, 0)])
    b = Subspace.span(6, [unit(6, 1)])
    assert (a + b) == Subspace.span(6, [unit(6, 0), unit(6, 1)])
