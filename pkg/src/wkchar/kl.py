"""Kazhdan-Lusztig polynomials over an abstract Coxeter system.

The engine only needs lengths, generator multiplication, and Bruhat
comparisons, so the same code serves finite test groups and the integral
Weyl groups W^Lambda.  A ``KLSession`` owns all memo tables; sessions are
single-owner but produce identical results independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence, Tuple


@dataclass(frozen=True)
class KLPolynomial:
    """Polynomial in q with integer coefficients, index = power of q."""

    coefficients: Tuple[int, ...]

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> "KLPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @classmethod
    def zero(cls) -> "KLPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "KLPolynomial":
        return cls((1,))

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def eval_at_one(self) -> int:
        return sum(self.coefficients)

    def shifted(self, k: int) -> "KLPolynomial":
        if self.is_zero():
            return self
        return KLPolynomial.of((0,) * k + self.coefficients)

    def __add__(self, other: "KLPolynomial") -> "KLPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return KLPolynomial.of(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    def __sub__(self, other: "KLPolynomial") -> "KLPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return KLPolynomial.of(
            tuple(self.coefficient(k) - other.coefficient(k) for k in range(n)))

    def scaled(self, c: int) -> "KLPolynomial":
        return KLPolynomial.of(tuple(c * a for a in self.coefficients))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, a in enumerate(self.coefficients):
            if a == 0:
                continue
            if k == 0:
                parts.append(str(a))
            else:
                qk = "q" if k == 1 else f"q^{k}"
                parts.append(qk if a == 1 else f"{a}{qk}" if a != -1 else f"-{qk}")
        return " + ".join(parts).replace("+ -", "- ")


class CoxeterInterface:
    """What the KL engine needs from a Coxeter system.

    Subclasses supply: ``rank`` (generator count), ``identity``, and the four
    methods below.  Elements must be hashable and equality-comparable, and
    the exchange condition must hold: a descent s of w has l(ws) = l(w) - 1.
    """

    rank: int
    identity: Hashable

    def length(self, x) -> int:
        raise NotImplementedError

    def right_multiply(self, x, i: int):
        raise NotImplementedError

    def left_multiply(self, i: int, x):
        raise NotImplementedError

    def bruhat_leq(self, x, y) -> bool:
        raise NotImplementedError

    # derived operations

    def right_descents(self, x) -> list[int]:
        lx = self.length(x)
        return [i for i in range(1, self.rank + 1)
                if self.length(self.right_multiply(x, i)) < lx]

    def left_descents(self, x) -> list[int]:
        lx = self.length(x)
        return [i for i in range(1, self.rank + 1)
                if self.length(self.left_multiply(i, x)) < lx]


class KLSession:
    """Memoized P/Q computations for one Coxeter system."""

    def __init__(self, system: CoxeterInterface):
        self.system = system
        self._p: dict = {}
        self._q: dict = {}
        self._cone: dict = {}
        self._words: dict = {}

    # ---- canonical words (for deterministic sorting only)

    def canonical_word(self, x) -> Tuple[int, ...]:
        cached = self._words.get(x)
        if cached is not None:
            return cached
        word = []
        current = x
        while current != self.system.identity:
            i = self.system.left_descents(current)[0]
            word.append(i)
            current = self.system.left_multiply(i, current)
        out = tuple(word)
        self._words[x] = out
        return out

    def _sort_key(self, x):
        return (self.system.length(x), self.canonical_word(x))

    # ---- Bruhat cones and intervals

    def lower_cone(self, y) -> frozenset:
        """{z : z <= y}, via the descent recursion on cones."""
        cached = self._cone.get(y)
        if cached is not None:
            return cached
        sys = self.system
        if y == sys.identity:
            out = frozenset([y])
        else:
            i = sys.right_descents(y)[0]
            below = self.lower_cone(sys.right_multiply(y, i))
            out = frozenset(below | {sys.right_multiply(z, i) for z in below})
        self._cone[y] = out
        return out

    def bruhat_interval(self, x, y) -> list:
        """All z with x <= z <= y, sorted by (length, canonical word)."""
        sys = self.system
        if not sys.bruhat_leq(x, y):
            return []
        zs = [z for z in self.lower_cone(y) if sys.bruhat_leq(x, z)]
        zs.sort(key=self._sort_key)
        return zs

    # ---- the polynomials

    def kl_polynomial(self, x, y) -> KLPolynomial:
        """P_{x,y} by the classical descent recursion with mu-corrections."""
        sys = self.system
        if x == y:
            return KLPolynomial.one()
        if not sys.bruhat_leq(x, y):
            return KLPolynomial.zero()
        key = (x, y)
        cached = self._p.get(key)
        if cached is not None:
            return cached
        if sys.length(y) - sys.length(x) <= 2:
            # forced: constant term 1 and degree bound < 1
            result = KLPolynomial.one()
            self._p[key] = result
            return result

        i = sys.right_descents(y)[0]
        v = sys.right_multiply(y, i)        # y = v s, shorter
        xs = sys.right_multiply(x, i)
        descent = sys.length(xs) < sys.length(x)
        c = 1 if descent else 0
        result = (self.kl_polynomial(xs, v).shifted(1 - c)
                  + self.kl_polynomial(x, v).shifted(c))
        ly = sys.length(y)
        for z in self.lower_cone(v):
            if z == v or sys.length(sys.right_multiply(z, i)) >= sys.length(z):
                continue
            if not sys.bruhat_leq(x, z):
                continue
            mu = self.mu_coefficient(z, v)
            if mu == 0:
                continue
            half = ly - sys.length(z)
            assert half % 2 == 0
            result = result - self.kl_polynomial(x, z).scaled(mu).shifted(half // 2)
        bound = (ly - sys.length(x) - 1) // 2
        assert result.coefficient(0) == 1 and result.degree() <= bound, \
            "KL recursion violated its degree normalization"
        self._p[key] = result
        return result

    def mu_coefficient(self, x, y) -> int:
        """Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y}, else 0."""
        diff = self.system.length(y) - self.system.length(x)
        if diff <= 0 or diff % 2 == 0:
            return 0
        return self.kl_polynomial(x, y).coefficient((diff - 1) // 2)

    def inverse_kl(self, w, y) -> KLPolynomial:
        """Q_{w,y} from sum_{w<=z<=y} (-1)^{l(z)-l(w)} P_{w,z} Q_{z,y} = delta_{w,y}."""
        sys = self.system
        if w == y:
            return KLPolynomial.one()
        if not sys.bruhat_leq(w, y):
            return KLPolynomial.zero()
        key = (w, y)
        cached = self._q.get(key)
        if cached is not None:
            return cached
        total = KLPolynomial.zero()
        lw = sys.length(w)
        for z in self.bruhat_interval(w, y):
            if z == w:
                continue
            sign = -1 if (sys.length(z) - lw) % 2 else 1
            term = _poly_mul(self.kl_polynomial(w, z), self.inverse_kl(z, y))
            total = total + term.scaled(sign)
        result = total.scaled(-1)
        self._q[key] = result
        return result


def _poly_mul(a: KLPolynomial, b: KLPolynomial) -> KLPolynomial:
    if a.is_zero() or b.is_zero():
        return KLPolynomial.zero()
    out = [0] * (len(a.coefficients) + len(b.coefficients) - 1)
    for i, ai in enumerate(a.coefficients):
        for j, bj in enumerate(b.coefficients):
            out[i + j] += ai * bj
    return KLPolynomial.of(tuple(out))


# -- one-shot conveniences ---------------------------------------------------

def kl_polynomial(system: CoxeterInterface, x, y) -> KLPolynomial:
    return KLSession(system).kl_polynomial(x, y)


def mu_coefficient(system: CoxeterInterface, x, y) -> int:
    return KLSession(system).mu_coefficient(x, y)


def inverse_kl(system: CoxeterInterface, w, y) -> KLPolynomial:
    return KLSession(system).inverse_kl(w, y)


def bruhat_interval(system: CoxeterInterface, x, y) -> list:
    return KLSession(system).bruhat_interval(x, y)
