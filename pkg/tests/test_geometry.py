"""Complex structure, metric, quaternionic coordinates and the 4-form."""

from fractions import Fraction
from itertools import permutations

import pytest

from qktoledo import (FieldElem, Matrix, Quat, TangentVec,
                      ZERO, ONE, I, QUAT_J,
                      ball_tangent, complex_structure_j, kahler_form,
                      make_embedding, metric_g0, omega4, omega_unit,
                      standard_quadruple, su2_action_check, to_quat,
                      wedge_square_eval)

from _helpers import rng, rand_tangent, rand_complex_vec, rand_fraction

RHO = make_embedding("rho")
TOT = make_embedding("totally_real")
QUAD = standard_quadruple(2)


def perm_sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return 1 if inv % 2 == 0 else -1


def wedge_square_oracle(form, vecs):
    """Signed sum over the three perfect matchings of four slots."""
    total = ZERO
    for perm in permutations(range(4)):
        a, b, c, d = perm
        if a > b or c > d or a > c:
            continue
        total = total + perm_sign(perm) * (form(vecs[a], vecs[b])
                                           * form(vecs[c], vecs[d]))
    return total


def test_full_tangent_matrix_lies_in_su_p_q():
    r = rng(300)
    form = Matrix.diagonal([1, 1, 1, 1, -1, -1])
    for _ in range(50):
        m = rand_tangent(r, 4).su_matrix()
        assert (m.conj_transpose() @ form + form @ m).is_zero()
        assert m.trace() == ZERO


def test_complex_structure():
    x = TangentVec(Matrix.identity(2))
    assert complex_structure_j(x) == TangentVec(Matrix.identity(2) * I)
    r = rng(301)
    for _ in range(50):
        y = rand_tangent(r, 4)
        assert complex_structure_j(complex_structure_j(y)) == -y
    # J carries the first diagonal basis image to the second
    assert complex_structure_j(RHO((ONE, ZERO))) == RHO((I, ZERO))


def test_metric_values():
    e11 = TangentVec(Matrix([[ONE, ZERO], [ZERO, ZERO]]))
    assert metric_g0(e11, e11) == FieldElem(4)
    x, y = ball_tangent(QUAD[0]), ball_tangent(QUAD[1])
    assert metric_g0(x, y) == ZERO
    assert metric_g0(x, x) == FieldElem(4)


def test_metric_symmetric_positive_j_invariant():
    r = rng(302)
    for _ in range(100):
        x, y = rand_tangent(r, 4), rand_tangent(r, 4)
        assert metric_g0(x, y) == metric_g0(y, x)
        assert metric_g0(complex_structure_j(x), complex_structure_j(y)) == metric_g0(x, y)
        if not x.is_zero():
            assert metric_g0(x, x).real_sign() > 0


def test_kahler_form_values_and_antisymmetry():
    x, y, z, w = (ball_tangent(v) for v in QUAD)
    assert kahler_form(x, y) == FieldElem(4)
    assert kahler_form(z, w) == FieldElem(4)
    assert wedge_square_eval(kahler_form, x, y, z, w) == FieldElem(16)
    r = rng(303)
    for _ in range(100):
        u, v = rand_tangent(r, 4), rand_tangent(r, 4)
        assert kahler_form(u, u) == ZERO
        assert kahler_form(u, v) == -kahler_form(v, u)
        assert kahler_form(u, v).is_real()


def test_wedge_alternation_on_repeat():
    r = rng(304)
    x, z, w = (rand_tangent(r, 4) for _ in range(3))
    assert wedge_square_eval(kahler_form, x, x, z, w) == ZERO


def test_wedge_matches_matchings_oracle():
    # random antisymmetric tables stand in for the 2-form
    r = rng(305)
    for _ in range(200):
        table = [[ZERO] * 4 for _ in range(4)]
        for a in range(4):
            for b in range(a + 1, 4):
                v = FieldElem(rand_fraction(r), 0, rand_fraction(r), 0)
                table[a][b], table[b][a] = v, -v
        form = lambda u, v: table[u][v]
        slots = (0, 1, 2, 3)
        assert wedge_square_eval(form, *slots) == wedge_square_oracle(form, slots)


def test_to_quat_examples_and_round_trip():
    assert to_quat(RHO((ONE, ZERO))).entries == (Quat(ONE), QUAT_J, Quat(), Quat())
    zero = TangentVec.zero(4, 2)
    assert to_quat(zero).entries == (Quat(),) * 4
    with pytest.raises(ValueError):
        to_quat(ball_tangent((ONE, ZERO)))
    r = rng(306)
    for _ in range(50):
        x = rand_tangent(r, 4)
        assert to_quat(x).to_tangent() == x


def test_totally_real_quat_coords():
    img = TOT((I, ZERO))
    assert to_quat(img).entries == (Quat(I), Quat(ZERO, -I), Quat(), Quat())


def test_omega_unit_values():
    x, y = RHO(QUAD[0]), RHO(QUAD[1])
    # single pairing is 2; its square in the wedge gives the 4 below
    assert omega_unit(x, y, "i") == FieldElem(2)
    assert omega_unit(x, y, "j") == ZERO
    assert omega_unit(x, y, "k") == ZERO
    r = rng(307)
    for _ in range(100):
        u = rand_tangent(r, 4)
        for unit in ("i", "j", "k"):
            assert omega_unit(u, u, unit) == ZERO
    # all three 2-forms vanish identically on totally real images
    for _ in range(50):
        u = TOT(rand_complex_vec(r, 2))
        v = TOT(rand_complex_vec(r, 2))
        for unit in ("i", "j", "k"):
            assert omega_unit(u, v, unit) == ZERO


def test_omega4_frozen_values():
    assert omega4(*(RHO(v) for v in QUAD)) == FieldElem(4)
    iota = make_embedding("sym_square")
    assert omega4(*(iota(v) for v in QUAD)) == FieldElem(Fraction(11, 4))
    assert omega4(*(TOT(v) for v in QUAD)) == ZERO


def test_omega4_alternating_and_multilinear():
    r = rng(308)
    for _ in range(100):
        vecs = [rand_tangent(r, 4) for _ in range(4)]
        base = omega4(*vecs)
        i, j = sorted(r.sample(range(4), 2))
        swapped = list(vecs)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert omega4(*swapped) == -base
    for _ in range(50):
        x, x2, y, z, w = (rand_tangent(r, 4) for _ in range(5))
        a, b = rand_fraction(r), rand_fraction(r)
        combo = x.scale(a) + x2.scale(b)
        lhs = omega4(combo, y, z, w)
        rhs = a * omega4(x, y, z, w) + b * omega4(x2, y, z, w)
        assert lhs == rhs


def test_omega4_vs_unit_oracles():
    r = rng(309)
    for _ in range(50):
        vecs = [rand_tangent(r, 4) for _ in range(4)]
        total = ZERO
        for unit in ("i", "j", "k"):
            form = lambda u, v: omega_unit(u, v, unit)
            total = total + wedge_square_oracle(form, vecs)
        assert omega4(*vecs) == total


def test_holomorphic_pullback_identity_n2():
    imgs = [RHO(v) for v in QUAD]
    assert wedge_square_eval(kahler_form, *imgs) == omega4(*imgs) * 16
    r = rng(310)
    for _ in range(100):
        imgs = [RHO(rand_complex_vec(r, 2)) for _ in range(4)]
        assert wedge_square_eval(kahler_form, *imgs) == omega4(*imgs) * 16


def test_su2_action_is_right_multiplication():
    r = rng(311)
    for unit in ("i", "j", "k"):
        assert su2_action_check(unit, TangentVec.zero(4, 2))
        for _ in range(100):
            assert su2_action_check(unit, rand_tangent(r, 4))


def test_right_multiplications_square_and_anticommute():
    r = rng(312)
    for _ in range(50):
        qc = to_quat(rand_tangent(r, 4))
        for unit in ("i", "j", "k"):
            twice = qc.right_mul(unit).right_mul(unit)
            assert twice.entries == tuple(-q for q in qc.entries)
        for u1, u2 in (("i", "j"), ("j", "k"), ("k", "i")):
            ab = qc.right_mul(u1).right_mul(u2)
            ba = qc.right_mul(u2).right_mul(u1)
            assert ab.entries == tuple(-q for q in ba.entries)
