"""Affine weights, the extended Weyl group, and the reduction maps."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from wkchar.affine import (AffineRealRoot, AffineWeight, affine_pairing,
                           add_weights, dot_apply, dual_hw_map,
                           finite_element, group_op, identity_element, invert,
                           minus_reduction_hw, norm_sq_affine, norm_sq_finite,
                           plus_reduction_hw, reflection_element, rho_affine,
                           root_action, translation_element,
                           w0_element, weyl_apply)
from wkchar.errors import PreconditionError
from wkchar.rootdata import LieType, build_root_system

A1 = build_root_system(LieType.parse("A1"))
A2 = build_root_system(LieType.parse("A2"))
B2 = build_root_system(LieType.parse("B2"))


def random_weight(rs, rng, max_den=4):
    return AffineWeight(
        tuple(Fraction(rng.randint(-6, 6), rng.randint(1, max_den))
              for _ in range(rs.rank)),
        Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
        Fraction(rng.randint(-3, 3)))


def random_element(rs, rng, translations=2):
    el = identity_element(rs)
    for _ in range(rng.randint(0, 4)):
        el = group_op(rs, el, finite_element(rs, [rng.randint(1, rs.rank)]))
    # integer combinations of fundamental coweights: nu(pi_k_vee) has k-th
    # coordinate 1/d_k = rho_check[k] and zeros elsewhere
    mu = [rng.randint(-translations, translations) for _ in range(rs.rank)]
    nu = tuple(Fraction(mu[k]) * rs.rho_check[k] for k in range(rs.rank))
    return group_op(rs, el, translation_element(rs, nu))


def test_pairing_examples():
    lam = AffineWeight((Fraction(1, 4) - 1,), Fraction(3, 4) - 2)  # level kappa - h
    shifted = add_weights(lam, rho_affine(A1))
    alpha = AffineRealRoot(A1.positive_roots[0], 1)
    assert affine_pairing(A1, shifted, alpha) == Fraction(1, 4) + Fraction(3, 4)
    # degree 0 reduces to the finite pairing
    alpha0 = AffineRealRoot(A1.positive_roots[0], 0)
    assert affine_pairing(A1, shifted, alpha0) == Fraction(1, 4)
    # -alpha + n delta at level kappa
    neg = AffineRealRoot(-A1.positive_roots[0], 5)
    assert affine_pairing(A1, shifted, neg) == -Fraction(1, 4) + 5 * Fraction(3, 4)


def test_norms():
    lam = AffineWeight((Fraction(1),), Fraction(0), Fraction(0))
    assert norm_sq_finite(A1, lam) == Fraction(1, 2)
    zero = AffineWeight((Fraction(0),), Fraction(3), Fraction(5))
    assert norm_sq_finite(A1, zero) == 0
    assert norm_sq_affine(A1, zero) == 30


def test_translation_formula_on_lambda0():
    lam0 = AffineWeight((Fraction(0),), Fraction(1), Fraction(0))
    t = translation_element(A1, (Fraction(2),))  # alpha_vee
    image = weyl_apply(A1, t, lam0)
    assert image == AffineWeight((Fraction(2),), Fraction(1), Fraction(-1))
    e = identity_element(A1)
    assert weyl_apply(A1, e, lam0) == lam0


def test_coweight_lattice_membership_enforced():
    translation_element(A1, (Fraction(1),))   # pi_1 = alpha_vee/2 is a coweight
    translation_element(A1, (Fraction(2),))   # alpha_vee
    with pytest.raises(PreconditionError):
        translation_element(A1, (Fraction(1, 2),))
    # B2: nu(pi_2_vee) has coords (0, 2) since d_2 = 1/2
    translation_element(B2, (Fraction(0), Fraction(2)))
    with pytest.raises(PreconditionError):
        translation_element(B2, (Fraction(0), Fraction(1)))


@pytest.mark.parametrize("rs", [A1, A2, B2])
def test_affine_norm_invariance(rs):
    rng = random.Random(23)
    for _ in range(60):
        lam = random_weight(rs, rng)
        w = random_element(rs, rng)
        image = weyl_apply(rs, w, lam)
        assert norm_sq_affine(rs, image) == norm_sq_affine(rs, lam)
        assert image.level == lam.level


def test_dot_action_examples():
    zero = AffineWeight((Fraction(0),), Fraction(0), Fraction(0))
    s = finite_element(A1, [1])
    assert dot_apply(A1, s, zero).finite == (Fraction(-2),)  # s o 0 = -alpha
    assert dot_apply(A1, identity_element(A1), zero) == zero


@pytest.mark.parametrize("rs", [A1, A2])
def test_dot_action_composition(rs):
    rng = random.Random(5)
    for _ in range(50):
        lam = random_weight(rs, rng)
        w, v = random_element(rs, rng), random_element(rs, rng)
        lhs = dot_apply(rs, w, dot_apply(rs, v, lam))
        rhs = dot_apply(rs, group_op(rs, w, v), lam)
        assert lhs == rhs
        assert dot_apply(rs, w, lam).level == lam.level


def test_group_axioms_and_translations():
    rng = random.Random(13)
    els = [random_element(A2, rng) for _ in range(5)]
    for a, b, c in itertools.product(els, repeat=3):
        assert group_op(A2, group_op(A2, a, b), c) == group_op(A2, a, group_op(A2, b, c))
    for a in els:
        assert group_op(A2, a, invert(A2, a)).is_identity()
        assert group_op(A2, invert(A2, a), a).is_identity()
    t1 = translation_element(A2, (Fraction(1), Fraction(0)))
    t2 = translation_element(A2, (Fraction(2), Fraction(-1)))
    assert group_op(A2, t1, t2) == translation_element(A2, (Fraction(3), Fraction(-1)))
    assert invert(A2, t1) == translation_element(A2, (Fraction(-1), Fraction(0)))


def test_root_action():
    alpha = AffineRealRoot(A1.positive_roots[0], 0)
    t = translation_element(A1, (Fraction(2),))
    assert root_action(A1, t, alpha) == AffineRealRoot(A1.positive_roots[0], -2)
    w0 = w0_element(A2)
    for simple in A2.simple_roots:
        image = root_action(A2, w0, AffineRealRoot(simple, 0))
        assert image.degree == 0 and A2.root_sign(image.finite) == -1


@pytest.mark.parametrize("rs", [A1, A2, B2])
def test_pairing_equivariance(rs):
    rng = random.Random(3)
    for _ in range(50):
        lam = random_weight(rs, rng)
        w = random_element(rs, rng)
        root = AffineRealRoot(
            rng.choice(rs.positive_roots) if rng.random() < 0.5
            else -rng.choice(rs.positive_roots), rng.randint(-3, 3))
        lhs = affine_pairing(rs, weyl_apply(rs, w, lam), root_action(rs, w, root))
        assert lhs == affine_pairing(rs, lam, root)


@pytest.mark.parametrize("rs", [A1, A2, B2])
def test_translation_finite_part_rule(rs):
    # y = t_mu v at level kappa:  finite(y(lam)) = v(lam_bar) + kappa*mu
    rng = random.Random(17)
    for _ in range(40):
        lam = random_weight(rs, rng)
        word = [rng.randint(1, rs.rank) for _ in range(rng.randint(0, 3))]
        v = finite_element(rs, word)
        nu = tuple(Fraction(rng.randint(-2, 2)) * rs.rho_check[k]
                   for k in range(rs.rank))
        y = group_op(rs, translation_element(rs, nu), v)
        expected = tuple(a + lam.level * b
                         for a, b in zip(rs.matrix_apply(v.matrix, lam.finite), nu))
        assert weyl_apply(rs, y, lam).finite == expected


def test_reflection_elements_match_direct_formula():
    rng = random.Random(29)
    for rs in (A1, A2, B2):
        for _ in range(30):
            finite = rng.choice(rs.positive_roots)
            if rng.random() < 0.5:
                finite = -finite
            root = AffineRealRoot(finite, rng.randint(-3, 3))
            s = reflection_element(rs, root)
            lam = random_weight(rs, rng)
            p = affine_pairing(rs, lam, root)
            direct = AffineWeight(
                tuple(x - p * c for x, c in zip(lam.finite, root.finite.coords)),
                lam.level, lam.delta_coeff - p * root.degree)
            assert weyl_apply(rs, s, lam) == direct
            assert group_op(rs, s, s).is_identity()


def test_reduction_maps():
    lam = AffineWeight((Fraction(5, 7),), Fraction(2, 3), Fraction(1, 2))
    assert minus_reduction_hw(lam) == lam.finite
    rng = random.Random(41)
    for rs in (A1, A2, B2):
        for _ in range(20):
            kappa = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 7))
            vac = AffineWeight(tuple(Fraction(0) for _ in range(rs.rank)),
                               kappa - rs.dual_coxeter)
            expected = tuple(-kappa * c for c in rs.rho_check)
            assert plus_reduction_hw(rs, vac) == expected


def test_plus_reduction_affine_linear_in_weight():
    rng = random.Random(43)
    for rs in (A1, A2):
        kappa = Fraction(5, 3)
        level = kappa - rs.dual_coxeter

        def red(finite):
            return plus_reduction_hw(rs, AffineWeight(finite, level))

        for _ in range(20):
            x = tuple(Fraction(rng.randint(-5, 5), 2) for _ in range(rs.rank))
            y = tuple(Fraction(rng.randint(-5, 5), 2) for _ in range(rs.rank))
            mid = tuple((a + b) / 2 for a, b in zip(x, y))
            lhs = red(mid)
            rhs = tuple((a + b) / 2 for a, b in zip(red(x), red(y)))
            assert lhs == rhs


def test_dual_hw_map():
    assert dual_hw_map(A1, (Fraction(3, 5),)) == (Fraction(3, 5),)
    assert dual_hw_map(A2, (Fraction(1), Fraction(0))) == (Fraction(0), Fraction(1))
    rng = random.Random(47)
    for rs in (A2, B2):
        for _ in range(20):
            lam = tuple(Fraction(rng.randint(-6, 6), 3) for _ in range(rs.rank))
            assert dual_hw_map(rs, dual_hw_map(rs, lam)) == lam
