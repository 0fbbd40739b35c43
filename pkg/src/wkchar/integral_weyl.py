"""Integral root subsystems R^Lambda and their Coxeter groups W^Lambda.

For a non-critical affine weight Lambda the real roots pairing integrally
with Lambda + rho form a subsystem.  Along each finite direction the
integral degrees form an arithmetic progression, so the subsystem is
represented symbolically by one progression per signed finite root; slices
are enumerations of a bounded degree window.  Lengths, descents, reduced
words, and Bruhat order are computed from inversion sets, which are finite
because the degree of an inversion is bounded by the translation part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from . import affine
from .affine import AffineRealRoot, AffineWeight, ExtendedWeylElement
from .errors import (ClosureBoundError, CriticalLevelError, MembershipError,
                     PreconditionError)
from .kl import CoxeterInterface
from .rootdata import FiniteRoot, RootSystem


def kappa_of(rs: RootSystem, lam: AffineWeight) -> Fraction:
    """<lam + rho, K> = level + dual Coxeter number."""
    return lam.level + rs.dual_coxeter


def _require_noncritical(rs: RootSystem, lam: AffineWeight) -> Fraction:
    kappa = kappa_of(rs, lam)
    if kappa == 0:
        raise CriticalLevelError("kappa = 0 (critical level)")
    return kappa


# -- the degree congruence engine -------------------------------------------
#
# Along the direction eps*gamma (gamma a positive finite root) the pairing of
# a fixed weight with (eps*gamma + n*delta)_vee is a + n*t, where
# a = eps*<finite, gamma_vee> and t = 2*level/(gamma,gamma).  Everything the
# module decides reduces to the integer solutions of a + n*t in ZZ.

@dataclass(frozen=True)
class DegreeProgression:
    """Solutions n of a + n*t in ZZ: n = first + k*period, k in ZZ."""

    first: int       # canonical representative, 0 <= first < period
    period: int
    a: Fraction
    t: Fraction

    def value(self, n: int) -> Fraction:
        return self.a + n * self.t

    def least_geq(self, n_min: int) -> int:
        return self.first + self.period * math.ceil(Fraction(n_min - self.first, self.period))

    def members(self, lo: int, hi: int) -> Iterable[int]:
        n = self.least_geq(lo)
        while n <= hi:
            yield n
            n += self.period

    def count_leq(self, n_min: int, bound: Fraction) -> int:
        """Number of solutions with n_min <= n <= bound."""
        n = self.least_geq(n_min)
        top = math.floor(bound)
        if n > top:
            return 0
        return (top - n) // self.period + 1

    def __contains__(self, n: int) -> bool:
        return (n - self.first) % self.period == 0


def solve_integrality(a: Fraction, t: Fraction) -> Optional[DegreeProgression]:
    """The set {n : a + n*t in ZZ} as a progression, or None if empty."""
    if t == 0:
        raise ValueError("degree coefficient must be nonzero")
    d = math.lcm(a.denominator, t.denominator)
    big_a, big_t = int(a * d), int(t * d)
    g = math.gcd(big_t, d)
    if big_a % g:
        return None
    period = d // g
    if period == 1:
        return DegreeProgression(0, 1, a, t)
    inv = pow((big_t // g) % period, -1, period)
    first = (-(big_a // g) * inv) % period
    return DegreeProgression(first, period, a, t)


def _directions(rs: RootSystem) -> list[tuple[FiniteRoot, int]]:
    return [(gamma, eps) for gamma in rs.positive_roots for eps in (1, -1)]


def _signed_root(gamma: FiniteRoot, eps: int, n: int) -> AffineRealRoot:
    return AffineRealRoot(gamma if eps > 0 else -gamma, n)


def _progressions(rs: RootSystem, lam: AffineWeight):
    """Integral-degree progressions of lam + rho along every signed direction."""
    shifted = affine.add_weights(lam, affine.rho_affine(rs))
    out = {}
    for gamma, eps in _directions(rs):
        a = eps * rs.coroot_pairing(shifted.finite, gamma)
        t = 2 * shifted.level / rs.root_norm_sq(gamma)
        out[(gamma, eps)] = solve_integrality(a, t)
    return out


# -- slices ------------------------------------------------------------------

def integral_root_slice(rs: RootSystem, lam: AffineWeight,
                        degree_bound: int) -> list[AffineRealRoot]:
    """All alpha = abar + n*delta in R^Lambda with |n| <= degree_bound.

    Positive roots come first; both halves sorted by (degree, finite part).
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    _require_noncritical(rs, lam)
    progs = _progressions(rs, lam)
    pos: list[AffineRealRoot] = []
    neg: list[AffineRealRoot] = []
    for (gamma, eps), prog in progs.items():
        if prog is None:
            continue
        n_min = 0 if eps > 0 else 1
        for n in prog.members(n_min, degree_bound):
            pos.append(_signed_root(gamma, eps, n))
        for n in prog.members(-degree_bound, n_min - 1):
            neg.append(_signed_root(gamma, eps, n))
    key = lambda r: (r.degree, r.finite.coords)
    return sorted(pos, key=key) + sorted(neg, key=key)


def _default_bound(rs: RootSystem, kappa: Fraction) -> int:
    max_height = rs.root_height(rs.highest_root)
    return 4 * kappa.denominator * max_height


# -- predicates ---------------------------------------------------------------

def is_nondegenerate(rs: RootSystem, lam: AffineWeight) -> bool:
    """No finite root pairs integrally with the weight."""
    return all(rs.coroot_pairing(lam.finite, gamma).denominator != 1
               for gamma in rs.positive_roots)


def cond_plus_obstruction_set(rs: RootSystem) -> list[AffineRealRoot]:
    """{-abar + n*delta : abar positive, 1 <= n <= height(abar)}."""
    return [AffineRealRoot(-gamma, n)
            for gamma in rs.positive_roots
            for n in range(1, rs.root_height(gamma) + 1)]


def satisfies_cond_plus(rs: RootSystem, lam: AffineWeight) -> bool:
    """Whether the weight pairs non-integrally with the whole obstruction set."""
    for alpha in cond_plus_obstruction_set(rs):
        if affine_pairing_is_integral(rs, lam, alpha):
            return False
    return True


def affine_pairing_is_integral(rs: RootSystem, lam: AffineWeight,
                               alpha: AffineRealRoot) -> bool:
    return affine.affine_pairing(rs, lam, alpha).denominator == 1


def _violates(rs: RootSystem, lam: AffineWeight, forbidden_positive: bool) -> bool:
    """Whether <lam+rho, alpha_vee> hits a forbidden-sign integer on Delta_+^re.

    forbidden_positive=True scans for values in {1,2,...}; False for
    {-1,-2,...}.  Decided per signed finite direction from the degree
    progression: the integral values form an arithmetic progression with
    nonzero step t over an upward-infinite set of degrees, so only the least
    admissible solution (t monotone toward the forbidden side) or mere
    solvability (t monotone away) matters.
    """
    _require_noncritical(rs, lam)
    for (gamma, eps), prog in _progressions(rs, lam).items():
        if prog is None:
            continue
        n_min = 0 if eps > 0 else 1
        t = prog.t
        grows_forbidden = (t > 0) == forbidden_positive
        if grows_forbidden:
            # values run off to the forbidden side as n grows
            return True
        v = prog.value(prog.least_geq(n_min))
        if forbidden_positive and v >= 1:
            return True
        if not forbidden_positive and v <= -1:
            return True
    return False


def is_antidominant(rs: RootSystem, lam: AffineWeight) -> bool:
    """<lam+rho, alpha_vee> avoids {1,2,...} on all positive real roots."""
    return not _violates(rs, lam, forbidden_positive=True)


def domain_membership(rs: RootSystem, lam: AffineWeight, sign: str,
                      require_nondegenerate: bool = False) -> bool:
    """Dom_+ / Dom_-: pairings with positive real roots avoid negative
    (resp. positive) integers; optionally intersect with non-degeneracy."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    ok = not _violates(rs, lam, forbidden_positive=(sign == "-"))
    if require_nondegenerate:
        ok = ok and is_nondegenerate(rs, lam)
    return ok


# -- the Coxeter context -------------------------------------------------------

@dataclass(frozen=True)
class IntegralWeylElement:
    """A W^Lambda element together with its canonical reduced word."""

    element: ExtendedWeylElement
    word: Tuple[int, ...]
    length: int


class IntegralCoxeterContext:
    """R^Lambda data: simple system, generators, length/Bruhat services.

    Immutable after construction; the memo tables are only ever extended
    with deterministic values, so concurrent readers see consistent data.
    """

    def __init__(self, rs: RootSystem, lam: AffineWeight,
                 degree_bound: Optional[int] = None):
        self.rs = rs
        self.Lambda = lam
        self.kappa = _require_noncritical(rs, lam)
        self.slice_bound = degree_bound or _default_bound(rs, self.kappa)
        self._progs = _progressions(rs, lam)

        self.simple_roots: Tuple[AffineRealRoot, ...] = tuple(self._find_simples())
        self.rank = len(self.simple_roots)
        self.generator_reflections: Tuple[ExtendedWeylElement, ...] = tuple(
            affine.reflection_element(rs, beta) for beta in self.simple_roots)
        self.coxeter_matrix: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self._coxeter_order(i, j) for j in range(self.rank))
            for i in range(self.rank))
        self._verify_closure()

        self._length_cache: dict = {}
        self._bruhat_cache: dict = {}
        self._word_cache: dict = {}

    # ---- construction helpers

    def _root_in_subsystem(self, alpha: AffineRealRoot) -> bool:
        sign = self.rs.root_sign(alpha.finite)
        gamma = alpha.finite if sign > 0 else -alpha.finite
        prog = self._progs[(gamma, sign)]
        return prog is not None and alpha.degree in prog

    def _positive_in_subsystem(self, alpha: AffineRealRoot) -> bool:
        return affine.root_is_positive(self.rs, alpha) and self._root_in_subsystem(alpha)

    def _find_simples(self) -> list[AffineRealRoot]:
        """Reflection criterion, restricted to minimal-degree candidates.

        Only the least positive degree of each signed direction can be
        simple (reflecting one progression member in a later one lands
        negative).  A candidate beta fails only on roots gamma with
        degree(s_beta(gamma)) <= 0, and that forces
        degree(gamma) <= <gammabar, betabar_vee> * degree(beta), a finite
        window checked exactly.
        """
        rs = self.rs
        candidates: list[AffineRealRoot] = []
        for (gamma, eps), prog in self._progs.items():
            if prog is None:
                continue
            n_min = 0 if eps > 0 else 1
            candidates.append(_signed_root(gamma, eps, prog.least_geq(n_min)))
        simples = []
        for beta in candidates:
            if self._is_simple(beta):
                simples.append(beta)
        simples.sort(key=lambda r: (r.degree, r.finite.coords))
        return simples

    def _is_simple(self, beta: AffineRealRoot) -> bool:
        rs = self.rs
        for (gamma, eps), prog in self._progs.items():
            if prog is None:
                continue
            c = rs.coroot_pairing((gamma if eps > 0 else -gamma).coords, beta.finite)
            assert c.denominator == 1
            hi = int(c) * beta.degree  # images of degrees above this stay positive
            n_min = 0 if eps > 0 else 1
            for n in prog.members(n_min, max(n_min, hi)):
                alpha = _signed_root(gamma, eps, n)
                if alpha == beta:
                    continue
                image = AffineRealRoot(
                    FiniteRoot(tuple(a - int(c) * b for a, b in
                               zip(alpha.finite.coords, beta.finite.coords))),
                    alpha.degree - int(c) * beta.degree)
                if not affine.root_is_positive(rs, image):
                    return False
        return True

    def _coxeter_order(self, i: int, j: int) -> int:
        """Order of s_i s_j; 0 encodes infinity."""
        if i == j:
            return 1
        bi, bj = self.simple_roots[i], self.simple_roots[j]
        cij = self.rs.coroot_pairing(bi.finite.coords, bj.finite)
        cji = self.rs.coroot_pairing(bj.finite.coords, bi.finite)
        product = int(cij * cji)
        return {0: 2, 1: 3, 2: 4, 3: 6}.get(product, 0)

    def _verify_closure(self) -> None:
        """Every slice element of R^Lambda_+ descends to the simple system."""
        bound = self.slice_bound
        for attempt in range(3):
            if self._closure_holds(bound):
                return
            bound *= 2
        raise ClosureBoundError(
            f"R^Lambda closure not verified within degree bound {bound}")

    def _closure_holds(self, bound: int) -> bool:
        rs = self.rs
        roots = [r for r in integral_root_slice(rs, self.Lambda, bound)
                 if affine.root_is_positive(rs, r)]
        simple_set = set(self.simple_roots)
        for alpha in roots:
            current = alpha
            for _ in range(10000):
                if current in simple_set:
                    break
                step = None
                for beta in self.simple_roots:
                    c = rs.coroot_pairing(current.finite.coords, beta.finite)
                    if c > 0:
                        step = (beta, int(c))
                        break
                if step is None:
                    return False
                beta, c = step
                current = AffineRealRoot(
                    FiniteRoot(tuple(a - c * b for a, b in
                               zip(current.finite.coords, beta.finite.coords))),
                    current.degree - c * beta.degree)
                if not self._positive_in_subsystem(current):
                    return False
            else:
                return False
        return True

    # ---- elements and words

    def identity(self) -> ExtendedWeylElement:
        return affine.identity_element(self.rs)

    def generator(self, i: int) -> ExtendedWeylElement:
        return self.generator_reflections[i - 1]

    def element_from_word(self, word: Sequence[int]) -> ExtendedWeylElement:
        el = self.identity()
        for i in word:
            if not 1 <= i <= self.rank:
                raise IndexError(f"generator index {i} out of 1..{self.rank}")
            el = affine.group_op(self.rs, el, self.generator(i))
        return el

    def wrap(self, element: ExtendedWeylElement) -> IntegralWeylElement:
        word = self.reduced_word(element)
        return IntegralWeylElement(element, tuple(word), len(word))

    def from_word(self, word: Sequence[int]) -> IntegralWeylElement:
        return self.wrap(self.element_from_word(word))

    # ---- lengths, descents, membership

    def length(self, w: ExtendedWeylElement) -> int:
        """# (R^Lambda_+  intersect  w^{-1} R^Lambda_-)."""
        cached = self._length_cache.get(w)
        if cached is not None:
            return cached
        rs = self.rs
        total = 0
        for (gamma, eps), prog in self._progs.items():
            if prog is None:
                continue
            finite = gamma if eps > 0 else -gamma
            image = FiniteRoot(rs.matrix_apply(w.matrix, finite.coords))
            c = rs.bilinear(image.coords, w.translation)
            # w(finite + n delta) = image + (n - c) delta
            n_min = 0 if eps > 0 else 1
            total += prog.count_leq(n_min, c - 1)
            if c.denominator == 1 and int(c) >= n_min and int(c) in prog \
                    and rs.root_sign(image) < 0:
                total += 1
        self._length_cache[w] = total
        return total

    def sends_negative(self, w: ExtendedWeylElement, alpha: AffineRealRoot) -> bool:
        return not affine.root_is_positive(self.rs, affine.root_action(self.rs, w, alpha))

    def right_descents(self, w: ExtendedWeylElement) -> list[int]:
        """{i : w(beta_i) in R^Lambda_-}, 1-based."""
        return [i + 1 for i, beta in enumerate(self.simple_roots)
                if self.sends_negative(w, beta)]

    def left_descents(self, w: ExtendedWeylElement) -> list[int]:
        inv = affine.invert(self.rs, w)
        return [i + 1 for i, beta in enumerate(self.simple_roots)
                if self.sends_negative(inv, beta)]

    def reduced_word(self, w: ExtendedWeylElement) -> list[int]:
        """Lexicographically smallest reduced word, by greedy left descents.

        Raises MembershipError when w is not generated by the s_{beta_i}.
        """
        cached = self._word_cache.get(w)
        if cached is not None:
            return list(cached)
        word: list[int] = []
        current = w
        length = self.length(current)
        while length > 0:
            descents = self.left_descents(current)
            if not descents:
                raise MembershipError("element is not in the integral Weyl group")
            i = descents[0]
            word.append(i)
            current = affine.group_op(self.rs, self.generator(i), current)
            new_length = self.length(current)
            if new_length != length - 1:
                raise MembershipError("element is not in the integral Weyl group")
            length = new_length
        if not current.is_identity():
            raise MembershipError("element is not in the integral Weyl group")
        self._word_cache[w] = tuple(word)
        return word

    def length_and_descents(self, w: ExtendedWeylElement) -> tuple[int, set[int]]:
        self.reduced_word(w)  # membership check
        return self.length(w), set(self.right_descents(w))

    # ---- Bruhat order

    def bruhat_leq(self, x: ExtendedWeylElement, y: ExtendedWeylElement) -> bool:
        """Descent recursion: with s a descent of y, x <= y iff min(x, xs) <= ys."""
        if x == y:
            return True
        lx, ly = self.length(x), self.length(y)
        if lx >= ly:
            return False
        key = (x, y)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        i = self.right_descents(y)[0]
        s = self.generator(i)
        ys = affine.group_op(self.rs, y, s)
        xs = affine.group_op(self.rs, x, s)
        xmin = xs if self.length(xs) < lx else x
        result = xmin == ys or self.bruhat_leq(xmin, ys)
        self._bruhat_cache[key] = result
        return result

    # ---- enumeration

    def ball(self, max_length: int) -> list[IntegralWeylElement]:
        """All elements of length <= max_length, sorted by (length, word)."""
        found = {self.identity(): ()}
        frontier = [self.identity()]
        for _ in range(max_length):
            new = []
            for el in frontier:
                for i in range(1, self.rank + 1):
                    nxt = affine.group_op(self.rs, el, self.generator(i))
                    if nxt not in found:
                        found[nxt] = None
                        new.append(nxt)
            frontier = new
        out = [self.wrap(el) for el in found]
        out.sort(key=lambda z: (z.length, z.word))
        return out

    def interval_below(self, w: ExtendedWeylElement) -> list[IntegralWeylElement]:
        """All y <= w, sorted by (length, word)."""
        lw = self.length(w)
        self.reduced_word(w)
        return [y for y in self.ball(lw) if self.bruhat_leq(y.element, w)]

    def above_norm_bounded(self, w: ExtendedWeylElement,
                           norm_bound: Fraction) -> list[IntegralWeylElement]:
        """All y >= w with |finite part of y(Lambda+rho)|^2 <= norm_bound.

        Requires kappa > 0, which makes the norm grow with the translation
        part: kappa |nu| <= sqrt(bound) + |lam_bar + rho_bar| caps nu, and
        the inversion count of t_nu v is at most
        sum_{alpha > 0} (|(nu, alpha)| + 1), capping the search depth.
        """
        if self.kappa <= 0:
            raise PreconditionError("norm-bounded enumeration requires kappa > 0")
        rs = self.rs
        shifted = affine.add_weights(self.Lambda, affine.rho_affine(rs))
        base_norm = rs.norm_sq(shifted.finite)
        if norm_bound < 0:
            return []

        def ceil_sqrt(x: Fraction) -> int:
            return math.isqrt(max(math.ceil(x) - 1, 0)) + 1

        radius = (Fraction(ceil_sqrt(norm_bound) + ceil_sqrt(base_norm))
                  / self.kappa) + 1
        cap = sum(ceil_sqrt(radius * radius * rs.root_norm_sq(gamma)) + 1
                  for gamma in rs.positive_roots)
        lw = self.length(w)
        out = []
        for y in self.ball(max(cap, lw)):
            if y.length < lw:
                continue
            image = affine.weyl_apply(rs, y.element, shifted)
            if rs.norm_sq(image.finite) > norm_bound:
                continue
            if self.bruhat_leq(w, y.element):
                out.append(y)
        return out

    # ---- stabilizer cosets

    def stabilizer_roots(self) -> list[AffineRealRoot]:
        """Positive roots alpha with <Lambda+rho, alpha_vee> = 0."""
        out = []
        for (gamma, eps), prog in self._progs.items():
            if prog is None:
                continue
            # a + n t = 0 at a single rational n
            n = -prog.a / prog.t
            n_min = 0 if eps > 0 else 1
            if n.denominator == 1 and int(n) >= n_min:
                out.append(_signed_root(gamma, eps, int(n)))
        out.sort(key=lambda r: (r.degree, r.finite.coords))
        return out

    def stabilizer_elements(self) -> list[ExtendedWeylElement]:
        gens = [affine.reflection_element(self.rs, r) for r in self.stabilizer_roots()]
        found = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            new = []
            for el in frontier:
                for g in gens:
                    nxt = affine.group_op(self.rs, el, g)
                    if nxt not in found:
                        found.add(nxt)
                        new.append(nxt)
            frontier = new
        return sorted(found, key=lambda el: self.length(el))

    def coset_extremes(self, w: ExtendedWeylElement) -> tuple[list[AffineRealRoot], bool, bool]:
        """(stabilizer generators, w longest in w W^Lambda_0, w shortest)."""
        roots = self.stabilizer_roots()
        lengths = [self.length(affine.group_op(self.rs, w, u))
                   for u in self.stabilizer_elements()]
        lw = self.length(w)
        return roots, lw == max(lengths), lw == min(lengths)


class IntegralWeylCoxeter(CoxeterInterface):
    """CoxeterInterface adapter so the KL engine runs on W^Lambda."""

    def __init__(self, ctx: IntegralCoxeterContext):
        self.ctx = ctx
        self.rank = ctx.rank
        self.identity = ctx.identity()

    def length(self, x: ExtendedWeylElement) -> int:
        return self.ctx.length(x)

    def right_multiply(self, x: ExtendedWeylElement, i: int) -> ExtendedWeylElement:
        return affine.group_op(self.ctx.rs, x, self.ctx.generator(i))

    def left_multiply(self, i: int, x: ExtendedWeylElement) -> ExtendedWeylElement:
        return affine.group_op(self.ctx.rs, self.ctx.generator(i), x)

    def bruhat_leq(self, x: ExtendedWeylElement, y: ExtendedWeylElement) -> bool:
        return self.ctx.bruhat_leq(x, y)


# -- spec-level operation names ----------------------------------------------

def integral_simple_system(rs: RootSystem, lam: AffineWeight,
                           degree_bound: Optional[int] = None) -> IntegralCoxeterContext:
    return IntegralCoxeterContext(rs, lam, degree_bound)


def length_and_descents(ctx: IntegralCoxeterContext,
                        w: ExtendedWeylElement) -> tuple[int, set[int]]:
    return ctx.length_and_descents(w)


def reduced_word(ctx: IntegralCoxeterContext, w: ExtendedWeylElement) -> list[int]:
    return ctx.reduced_word(w)


def bruhat_leq(ctx: IntegralCoxeterContext, x: ExtendedWeylElement,
               y: ExtendedWeylElement) -> bool:
    ctx.reduced_word(x)
    ctx.reduced_word(y)
    return ctx.bruhat_leq(x, y)


def generate_interval_below(ctx: IntegralCoxeterContext,
                            w: ExtendedWeylElement) -> list[IntegralWeylElement]:
    return ctx.interval_below(w)


def generate_above_norm_bounded(ctx: IntegralCoxeterContext, w: ExtendedWeylElement,
                                norm_bound: Fraction) -> list[IntegralWeylElement]:
    return ctx.above_norm_bounded(w, norm_bound)


def stabilizer_and_coset(ctx: IntegralCoxeterContext, w: ExtendedWeylElement):
    return ctx.coset_extremes(w)
