"""Pullback constants, their distinctness, and the composition arithmetic."""

import json
from fractions import Fraction

import pytest

from qktoledo import (FieldElem, CONVENTION, composition_invariant,
                      kahler_form, make_embedding, omega4, pullback_constant,
                      rho_embedding, standard_quadruple, wedge_square_eval)

from _helpers import rng, rand_complex_vec, rand_fraction

EXPECTED_RATIOS = {
    "rho": Fraction(1, 4),
    "sym_square": Fraction(11, 64),
    "phi": Fraction(1, 16),
    "totally_real": Fraction(0),
}


def test_pullback_ratios():
    for name, want in EXPECTED_RATIOS.items():
        rep = pullback_constant(make_embedding(name))
        assert rep.ratio == FieldElem(want)
        assert rep.ratio * 16 == rep.omega_value
        assert rep.convention == CONVENTION


def test_ratios_pairwise_distinct():
    ratios = [pullback_constant(make_embedding(n)).ratio for n in EXPECTED_RATIOS]
    for i in range(len(ratios)):
        for j in range(i + 1, len(ratios)):
            assert ratios[i] != ratios[j]


def test_report_json_fields():
    rep = pullback_constant(make_embedding("sym_square"))
    payload = rep.to_json_dict()
    assert set(payload) == {"embedding", "omega_on_basis",
                            "ratio_to_OmegaB2", "convention"}
    assert payload["ratio_to_OmegaB2"] == "11/64"
    assert payload["omega_on_basis"] == "11/4"
    json.dumps(payload)


def test_determinant_scaling_under_recombination():
    r = rng(501)
    emb = make_embedding("sym_square")
    quad = standard_quadruple(2)
    images = [emb(x) for x in quad]
    base = omega4(*images)
    for _ in range(100):
        m = [[rand_fraction(r, -3, 3, 3) for _ in range(4)] for _ in range(4)]
        det = _det4(m)
        if det == 0:
            continue
        recombined = []
        for row in m:
            acc = images[0].scale(row[0])
            for c, img in zip(row[1:], images[1:]):
                acc = acc + img.scale(c)
            recombined.append(acc)
        assert omega4(*recombined) == FieldElem(det) * base


def _det4(m):
    from itertools import permutations
    total = Fraction(0)
    for perm in permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4)
                  if perm[i] > perm[j])
        sign = 1 if inv % 2 == 0 else -1
        prod = Fraction(1)
        for i, p in enumerate(perm):
            prod *= m[i][p]
        total += sign * prod
    return total


@pytest.mark.parametrize("n", [2, 3, 4])
def test_holomorphic_pullback_identity_general_n(n):
    emb = rho_embedding(n)
    r = rng(510 + n)
    for _ in range(100):
        imgs = [emb(rand_complex_vec(r, n)) for _ in range(4)]
        assert wedge_square_eval(kahler_form, *imgs) == omega4(*imgs) * 16


def test_composition_invariant_values():
    assert composition_invariant(1, 16).value == 1
    assert composition_invariant(3, 8).value == Fraction(3, 2)
    rep = composition_invariant(2, 5, vol_source=11)
    assert rep.value == Fraction(5, 8)
    assert rep.below_source_bound is True   # 2*5 < 11
    rep = composition_invariant(3, 4, vol_source=12)
    assert rep.below_source_bound is False  # 3*4 = 12, not strict
    assert composition_invariant(2, 5).below_source_bound is None


def test_composition_invariant_rejects_bad_input():
    with pytest.raises(ValueError):
        composition_invariant(0, 4)
    with pytest.raises(ValueError):
        composition_invariant(1, 0)
    with pytest.raises(ValueError):
        composition_invariant(1, 4, vol_source=-1)
