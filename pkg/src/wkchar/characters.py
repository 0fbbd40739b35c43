"""Normalized characters of W-algebra highest-weight modules.

The two irreducible character formulas are alternating sums of Verma
characters over Bruhat-comparable integral Weyl elements, with Kazhdan-
Lusztig values as multiplicities:

   '+':  sum over y >= w of (-1)^(l(y)-l(w)) Q_{w,y}(1) q^(|y(Lam+rho)|^2/2k)
   '-':  sum over y <= w of (-1)^(l(y)-l(w)) P_{y,w}(1) q^(|y(Lam+rho)|^2/2k)

both divided by eta(tau)^rank, where the exponent norm is taken on the
finite part of y(Lam+rho).  Every exponent of one character lies on an
integer lattice above the leading term, which itself sits at
Delta - c(kappa)/24.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import affine
from .affine import AffineWeight
from .errors import (CosetError, CriticalLevelError, DegenerateWeightError,
                     DomainError, PreconditionError)
from .integral_weyl import (IntegralCoxeterContext, IntegralWeylCoxeter,
                            IntegralWeylElement, domain_membership,
                            is_nondegenerate, kappa_of)
from .kl import KLSession
from .qseries import QSeries
from .rootdata import RootSystem


@dataclass(frozen=True)
class CharacterResult:
    series: QSeries
    central_charge: Fraction
    conformal_weight: Fraction
    metadata: dict = field(default_factory=dict, compare=False)


def central_charge(rs: RootSystem, kappa: Fraction) -> Fraction:
    """c(kappa) = l - 12(kappa|rho_vee|^2 - 2<rho, rho_vee> + |rho|^2/kappa)."""
    kappa = Fraction(kappa)
    if kappa == 0:
        raise CriticalLevelError("central charge undefined at kappa = 0")
    rho_v = rs.rho_check
    bracket = (kappa * rs.norm_sq(rho_v)
               - 2 * rs.bilinear(rs.rho, rho_v)
               + rs.norm_sq(rs.rho) / kappa)
    return rs.rank - 12 * bracket


def conformal_weight(rs: RootSystem, lam_bar: Sequence[Fraction],
                     kappa: Fraction) -> Fraction:
    """Delta = |lam_bar + rho|^2 / 2 kappa - rank/24 + c(kappa)/24."""
    kappa = Fraction(kappa)
    if kappa == 0:
        raise CriticalLevelError("conformal weight undefined at kappa = 0")
    shifted = tuple(Fraction(x) + 1 for x in lam_bar)
    return (rs.norm_sq(shifted) / (2 * kappa) - Fraction(rs.rank, 24)
            + central_charge(rs, kappa) / 24)


def eta_inverse_power(power: int, order: int) -> QSeries:
    """eta(tau)^(-power) = q^(-power/24) prod_n (1 - q^n)^(-power)."""
    if power < 0:
        raise ValueError("power must be >= 0")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for _ in range(power):
        for n in range(1, order + 1):
            for k in range(n, order + 1):
                coeffs[k] += coeffs[k - n]
    return QSeries(Fraction(-power, 24), tuple(coeffs), Fraction(1))


def verma_character(rs: RootSystem, lam_bar: Sequence[Fraction], kappa: Fraction,
                    order: int) -> CharacterResult:
    """ch M = q^{|lam_bar+rho|^2 / 2 kappa} / eta^rank."""
    kappa = Fraction(kappa)
    if kappa == 0:
        raise CriticalLevelError("Verma character undefined at kappa = 0")
    shifted = tuple(Fraction(x) + 1 for x in lam_bar)
    lead = rs.norm_sq(shifted) / (2 * kappa)
    series = eta_inverse_power(rs.rank, order).shifted(lead)
    return CharacterResult(
        series=series,
        central_charge=central_charge(rs, kappa),
        conformal_weight=conformal_weight(rs, lam_bar, kappa),
        metadata={"algebra": str(rs.lie_type), "kappa": kappa,
                  "weight": tuple(Fraction(x) for x in lam_bar), "kind": "verma"},
    )


def vacuum_algebra_character(rs: RootSystem, order: int) -> QSeries:
    """Graded dimension of the vacuum algebra itself.

    The generating fields have modes of degree d_i + n (n >= 1), so the
    graded dimension is prod_i prod_{m > d_i} (1 - q^m)^{-1}; this does not
    depend on kappa.
    """
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for d in rs.exponents:
        for n in range(d + 1, order + 1):
            for k in range(n, order + 1):
                coeffs[k] += coeffs[k - n]
    return QSeries(Fraction(0), tuple(coeffs), Fraction(1))


# -- irreducible characters ---------------------------------------------------

def _context_for(rs: RootSystem, lam: AffineWeight, w: IntegralWeylElement,
                 ctx: Optional[IntegralCoxeterContext],
                 degree_bound: Optional[int]) -> IntegralCoxeterContext:
    if ctx is not None:
        return ctx
    return IntegralCoxeterContext(rs, lam, degree_bound)


def _exponent(ctx: IntegralCoxeterContext, y) -> Fraction:
    rs = ctx.rs
    shifted = affine.add_weights(ctx.Lambda, affine.rho_affine(rs))
    image = affine.weyl_apply(rs, y, shifted)
    return rs.norm_sq(image.finite) / (2 * ctx.kappa)


def _assemble(rs: RootSystem, ctx: IntegralCoxeterContext, w: IntegralWeylElement,
              terms: list[tuple[Fraction, int]], order: int,
              kind: str) -> CharacterResult:
    """Multiply the alternating exponential sum by eta^{-rank} and package."""
    base = _exponent(ctx, w.element)
    lattice = [Fraction(0)] * (order + 1)
    for exponent, coeff in terms:
        rel = exponent - base
        if rel.denominator != 1 or rel < 0:
            raise PreconditionError(
                f"character term lands off the weight lattice (offset {rel}); "
                "check the coset representative and domain hypotheses")
        if rel <= order:
            lattice[int(rel)] += coeff
    theta = QSeries(base, tuple(lattice), Fraction(1))
    series = (theta * eta_inverse_power(rs.rank, order)).truncated(order)
    if series.coefficients[0] != 1:
        raise PreconditionError("leading coefficient is not 1; "
                                "the hypotheses of the character formula fail")
    lam_bar = affine.dot_apply(rs, w.element, ctx.Lambda).finite
    delta = conformal_weight(rs, lam_bar, ctx.kappa)
    c = central_charge(rs, ctx.kappa)
    assert series.offset == delta - c / 24
    return CharacterResult(
        series=series, central_charge=c, conformal_weight=delta,
        metadata={"algebra": str(rs.lie_type), "kappa": ctx.kappa,
                  "Lambda": ctx.Lambda, "word": w.word, "kind": kind},
    )


def _check_common(rs: RootSystem, lam: AffineWeight, sign: str) -> None:
    if kappa_of(rs, lam) == 0:
        raise CriticalLevelError("character formulas need kappa != 0")
    if not is_nondegenerate(rs, lam):
        raise DegenerateWeightError(
            "weight pairs integrally with a finite root (degenerate)")
    if not domain_membership(rs, lam, sign):
        name = "Dom_+" if sign == "+" else "Dom_-"
        raise DomainError(f"weight is outside {name}")


def irreducible_character_minus(rs: RootSystem, lam: AffineWeight,
                                w: IntegralWeylElement, order: int, *,
                                ctx: Optional[IntegralCoxeterContext] = None,
                                degree_bound: Optional[int] = None) -> CharacterResult:
    """ch L for the '-' reduction: finite alternating sum over y <= w."""
    _check_common(rs, lam, "-")
    context = _context_for(rs, lam, w, ctx, degree_bound)
    if kappa_of(rs, lam) > 0 and context.rank == 0:
        warnings.warn("kappa > 0 with empty integral system: "
                      "the sum degenerates to a single Verma character",
                      stacklevel=2)
    _, _, shortest = context.coset_extremes(w.element)
    if not shortest:
        raise CosetError("w must be the shortest element of its coset")
    session = KLSession(IntegralWeylCoxeter(context))
    terms = []
    lw = w.length
    for y in context.interval_below(w.element):
        p1 = session.kl_polynomial(y.element, w.element).eval_at_one()
        sign = -1 if (y.length - lw) % 2 else 1
        terms.append((_exponent(context, y.element), sign * p1))
    return _assemble(rs, context, w, terms, order, "irreducible-minus")


def irreducible_character_plus(rs: RootSystem, lam: AffineWeight,
                               w: IntegralWeylElement, order: int, *,
                               ctx: Optional[IntegralCoxeterContext] = None,
                               degree_bound: Optional[int] = None,
                               margin: int = 2) -> CharacterResult:
    """ch L for the '+' reduction: norm-bounded sum over y >= w (kappa > 0)."""
    kappa = kappa_of(rs, lam)
    if kappa < 0:
        raise PreconditionError(
            "the '+' character formula is refused for kappa < 0 "
            "(exponents do not grow; the sum cannot be truncated)")
    _check_common(rs, lam, "+")
    context = _context_for(rs, lam, w, ctx, degree_bound)
    _, longest, _ = context.coset_extremes(w.element)
    if not longest:
        raise CosetError("w must be the longest element of its coset")
    base = _exponent(context, w.element)
    norm_bound = 2 * kappa * (base + order + margin)
    session = KLSession(IntegralWeylCoxeter(context))
    terms = []
    lw = w.length
    for y in context.above_norm_bounded(w.element, norm_bound):
        q1 = session.inverse_kl(w.element, y.element).eval_at_one()
        sign = -1 if (y.length - lw) % 2 else 1
        terms.append((_exponent(context, y.element), sign * q1))
    return _assemble(rs, context, w, terms, order, "irreducible-plus")
