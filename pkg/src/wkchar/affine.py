"""Affine Cartan dual, real roots, and the extended Weyl group W~ = Wbar x Pbar_vee.

An ``AffineWeight`` is lam_bar + level*Lambda_0 + delta_coeff*delta.  An
``ExtendedWeylElement`` (matrix A, translation nu) is the group element
t_nu o A: the finite part acts first, then the lattice translation.
Translations are stored as the image of the coweight under the invariant
form, i.e. as vectors in the weight space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .rootdata import FiniteRoot, Matrix, RootSystem, Vector


@dataclass(frozen=True)
class AffineWeight:
    finite: Vector
    level: Fraction
    delta_coeff: Fraction = Fraction(0)

    @classmethod
    def from_level(cls, finite: Sequence[Fraction], level: Fraction,
                   delta: Fraction = Fraction(0)) -> "AffineWeight":
        return cls(tuple(Fraction(x) for x in finite), Fraction(level), Fraction(delta))


@dataclass(frozen=True)
class AffineRealRoot:
    """A real root ``finite + degree * delta`` with nonzero finite part."""

    finite: FiniteRoot
    degree: int

    def __neg__(self) -> "AffineRealRoot":
        return AffineRealRoot(-self.finite, -self.degree)


def root_is_positive(rs: RootSystem, alpha: AffineRealRoot) -> bool:
    if alpha.degree != 0:
        return alpha.degree > 0
    return rs.root_sign(alpha.finite) > 0


@dataclass(frozen=True)
class ExtendedWeylElement:
    """t_translation o (finite matrix); both parts exact rationals."""

    matrix: Matrix
    translation: Vector

    def is_identity(self) -> bool:
        n = len(self.translation)
        return (all(x == 0 for x in self.translation)
                and all(self.matrix[i][j] == (1 if i == j else 0)
                        for i in range(n) for j in range(n)))


def identity_element(rs: RootSystem) -> ExtendedWeylElement:
    return ExtendedWeylElement(rs.identity_matrix(),
                               tuple(Fraction(0) for _ in range(rs.rank)))


def translation_element(rs: RootSystem, mu: Sequence[Fraction]) -> ExtendedWeylElement:
    """t_mu for mu given as a weight-space vector; checks Pbar_vee membership."""
    nu = tuple(Fraction(x) for x in mu)
    for i, root in enumerate(rs.simple_roots):
        pairing = rs.bilinear(root.coords, nu)
        if pairing.denominator != 1:
            raise PreconditionError(
                f"translation {nu} is not in the coweight lattice: "
                f"<alpha_{i + 1}, mu> = {pairing}")
    return ExtendedWeylElement(rs.identity_matrix(), nu)


def finite_element(rs: RootSystem, word: Sequence[int]) -> ExtendedWeylElement:
    """Finite Weyl element from a word in 1-based simple-reflection indices."""
    return ExtendedWeylElement(rs.word_matrix(word),
                               tuple(Fraction(0) for _ in range(rs.rank)))


def w0_element(rs: RootSystem) -> ExtendedWeylElement:
    return ExtendedWeylElement(rs.w0_matrix, tuple(Fraction(0) for _ in range(rs.rank)))


def finite_reflection_matrix(rs: RootSystem, root: FiniteRoot) -> Matrix:
    """Matrix of the reflection at a finite root, on weight coordinates."""
    n = rs.rank
    alpha = root.coords
    norm = rs.root_norm_sq(root)
    # functional u with u(lam) = <lam, root_vee>
    u = tuple(2 * sum(rs.gram[k][j] * alpha[j] for j in range(n)) / norm
              for k in range(n))
    return tuple(
        tuple(Fraction(int(j == k)) - alpha[j] * u[k] for k in range(n))
        for j in range(n)
    )


def reflection_element(rs: RootSystem, alpha: AffineRealRoot) -> ExtendedWeylElement:
    """s_alpha for a real root alpha = abar + n*delta, as t_{-n abar_vee} s_abar."""
    if not rs.is_root(alpha.finite):
        raise ValueError("finite part is not a root")
    norm = rs.root_norm_sq(alpha.finite)
    coroot = tuple(2 * c / norm for c in alpha.finite.coords)
    nu = tuple(-alpha.degree * c for c in coroot)
    return ExtendedWeylElement(finite_reflection_matrix(rs, alpha.finite), nu)


# -- group structure -------------------------------------------------------

def group_op(rs: RootSystem, a: ExtendedWeylElement,
             b: ExtendedWeylElement) -> ExtendedWeylElement:
    """Composition a o b (b acts first): t_{nu_a + A nu_b} o (A B)."""
    matrix = rs.matrix_mul(a.matrix, b.matrix)
    moved = rs.matrix_apply(a.matrix, b.translation)
    translation = tuple(x + y for x, y in zip(a.translation, moved))
    return ExtendedWeylElement(matrix, translation)


def invert(rs: RootSystem, a: ExtendedWeylElement) -> ExtendedWeylElement:
    """(t_nu A)^{-1} = t_{-A^{-1} nu} A^{-1}."""
    from .rootdata import _invert
    inv = tuple(tuple(row) for row in _invert(a.matrix))
    translation = tuple(-x for x in rs.matrix_apply(inv, a.translation))
    return ExtendedWeylElement(inv, translation)


def weyl_apply(rs: RootSystem, w: ExtendedWeylElement, lam: AffineWeight) -> AffineWeight:
    """Apply the finite part, then t_nu(lam) = lam + k*nu - ((lam,nu) + |nu|^2 k/2) delta."""
    finite = rs.matrix_apply(w.matrix, lam.finite)
    nu = w.translation
    k = lam.level
    new_finite = tuple(x + k * c for x, c in zip(finite, nu))
    drop = rs.bilinear(finite, nu) + rs.norm_sq(nu) * k / 2
    return AffineWeight(new_finite, k, lam.delta_coeff - drop)


def rho_affine(rs: RootSystem) -> AffineWeight:
    """rho = rho_bar + h_vee * Lambda_0."""
    return AffineWeight(rs.rho, Fraction(rs.dual_coxeter))


def add_weights(a: AffineWeight, b: AffineWeight) -> AffineWeight:
    return AffineWeight(tuple(x + y for x, y in zip(a.finite, b.finite)),
                        a.level + b.level, a.delta_coeff + b.delta_coeff)


def sub_weights(a: AffineWeight, b: AffineWeight) -> AffineWeight:
    return AffineWeight(tuple(x - y for x, y in zip(a.finite, b.finite)),
                        a.level - b.level, a.delta_coeff - b.delta_coeff)


def dot_apply(rs: RootSystem, w: ExtendedWeylElement, lam: AffineWeight) -> AffineWeight:
    """The dot action w(lam + rho) - rho."""
    rho = rho_affine(rs)
    return sub_weights(weyl_apply(rs, w, add_weights(lam, rho)), rho)


def root_action(rs: RootSystem, w: ExtendedWeylElement,
                alpha: AffineRealRoot) -> AffineRealRoot:
    """w(abar + n delta); real roots map to real roots."""
    finite = FiniteRoot(rs.matrix_apply(w.matrix, alpha.finite.coords))
    shift = rs.bilinear(finite.coords, w.translation)
    assert shift.denominator == 1
    return AffineRealRoot(finite, alpha.degree - int(shift))


# -- pairings and norms ----------------------------------------------------

def affine_pairing(rs: RootSystem, lam: AffineWeight, alpha: AffineRealRoot) -> Fraction:
    """<lam, alpha_vee> = <lam_bar, abar_vee> + n (2/(abar,abar)) level(lam)."""
    base = rs.coroot_pairing(lam.finite, alpha.finite)
    return base + alpha.degree * 2 * lam.level / rs.root_norm_sq(alpha.finite)


def norm_sq_finite(rs: RootSystem, lam: AffineWeight) -> Fraction:
    return rs.norm_sq(lam.finite)


def norm_sq_affine(rs: RootSystem, lam: AffineWeight) -> Fraction:
    return rs.norm_sq(lam.finite) + 2 * lam.level * lam.delta_coeff


# -- highest-weight reduction maps ----------------------------------------

def minus_reduction_hw(lam: AffineWeight) -> Vector:
    """Highest weight of the image under the '-' reduction: the finite part."""
    return lam.finite


def plus_reduction_hw(rs: RootSystem, lam: AffineWeight) -> Vector:
    """Finite part of t_{-rho_vee} o lam, the '+'-reduction highest weight."""
    t = translation_element(rs, tuple(-c for c in rs.rho_check))
    return dot_apply(rs, t, lam).finite


def dual_hw_map(rs: RootSystem, lam_bar: Sequence[Fraction]) -> Vector:
    """-w0(lam_bar), the highest weight of the dual module."""
    img = rs.matrix_apply(rs.w0_matrix, tuple(Fraction(x) for x in lam_bar))
    return tuple(-x for x in img)
