"""Finite simple root systems of types A-G over exact rationals.

Weights are coordinate tuples in the fundamental-weight basis, so the
coroot pairing <lam, alpha_i_vee> is literally the i-th coordinate.  Roots
live in the same space: the coordinates of a simple root alpha_i are row i
of the Cartan matrix, and every other root is an integer combination of
those rows.  The invariant bilinear form is normalized so the highest root
has squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .errors import InvalidLieTypeError

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

_FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class LieType:
    """A simple Lie algebra family letter together with its rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, rank = self.family, self.rank
        ok = (
            (fam == "A" and rank >= 1)
            or (fam == "B" and rank >= 2)
            or (fam == "C" and rank >= 2)
            or (fam == "D" and rank >= 3)
            or (fam == "E" and rank in (6, 7, 8))
            or (fam == "F" and rank == 4)
            or (fam == "G" and rank == 2)
        )
        if not ok:
            raise InvalidLieTypeError(f"no simple Lie algebra of type {fam}{rank}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in _FAMILIES or not text[1:].isdigit():
            raise InvalidLieTypeError(f"cannot parse Lie type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class FiniteRoot:
    """A root of the finite system, in fundamental-weight coordinates."""

    coords: Vector

    def __neg__(self) -> "FiniteRoot":
        return FiniteRoot(tuple(-c for c in self.coords))


def _cartan_entries(lt: LieType) -> list[list[int]]:
    """Cartan matrix C[i][j] = <alpha_i, alpha_j_vee> (Bourbaki numbering)."""
    n = lt.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    fam = lt.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n_vee> = -2
            link(n - 2, n - 1, -2, -1)
        if fam == "C" and n >= 2:
            # alpha_n long
            link(n - 2, n - 1, -1, -2)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        # Bourbaki: node 2 hangs off node 4 of the A-chain 1-3-4-5-6(-7-8).
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)  # alpha_3, alpha_4 short
        link(2, 3)
    elif fam == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -1, -3)
    return c


def _close_positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All positive roots as root-basis integer vectors, by string closure."""
    n = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new: list[tuple[int, ...]] = []
        for m in frontier:
            for i in range(n):
                pairing = sum(m[j] * cartan[j][i] for j in range(n))
                # walk down the alpha_i string
                p = 0
                down = list(m)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing >= 1:
                    up = list(m)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        new.append(t)
        frontier = new
    return sorted(roots, key=lambda m: (sum(m), m))


def _invert(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class RootSystem:
    """Immutable finite root-system data; all operations are pure."""

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        self.rank = lie_type.rank
        n = self.rank
        cartan = _cartan_entries(lie_type)
        self.cartan: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in cartan)

        pos_rb = _close_positive_roots(cartan)  # root-basis coords
        theta_rb = pos_rb[-1]

        # Symmetrizer d_i with (alpha_i, alpha_j) = C[i][j] d_j, spread along
        # the Dynkin graph, then rescaled so (theta, theta) = 2.
        d = [Fraction(0)] * n
        d[0] = Fraction(1)
        todo = [0]
        seen = {0}
        while todo:
            i = todo.pop()
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                    seen.add(j)
                    todo.append(j)
        theta_norm = sum(
            theta_rb[i] * theta_rb[j] * cartan[i][j] * d[j]
            for i in range(n) for j in range(n)
        )
        scale = Fraction(2) / theta_norm
        self._d: Vector = tuple(x * scale for x in d)

        # Gram matrix of the form in fundamental-weight coordinates.
        ct_inv = _invert([[Fraction(cartan[j][i]) for j in range(n)] for i in range(n)])
        gram = [[self._d[i] * ct_inv[i][j] for j in range(n)] for i in range(n)]
        assert all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))
        self.gram: Matrix = tuple(tuple(row) for row in gram)
        self._ct_inv: Matrix = tuple(tuple(row) for row in ct_inv)

        def fw_coords(m: Sequence[int]) -> Vector:
            return tuple(
                Fraction(sum(m[i] * cartan[i][j] for i in range(n))) for j in range(n)
            )

        self.simple_roots: Tuple[FiniteRoot, ...] = tuple(
            FiniteRoot(fw_coords(tuple(1 if j == i else 0 for j in range(n))))
            for i in range(n)
        )
        self.positive_roots: Tuple[FiniteRoot, ...] = tuple(
            FiniteRoot(fw_coords(m)) for m in pos_rb
        )
        self.highest_root: FiniteRoot = self.positive_roots[-1]
        self._positive_set = frozenset(r.coords for r in self.positive_roots)
        self._height_by_coords = {
            r.coords: sum(m) for r, m in zip(self.positive_roots, pos_rb)
        }

        self.rho: Vector = tuple(Fraction(1) for _ in range(n))
        # nu(rho_vee): <alpha_i, rho_vee> = 1 forces coordinate 1/d_i.
        self.rho_check: Vector = tuple(Fraction(1) / di for di in self._d)
        self.dual_coxeter: int = int(1 + self.coroot_pairing(self.rho, self.highest_root))

        # Kostant: the height distribution of the positive roots is the
        # conjugate partition of the exponent multiset.
        heights = [sum(m) for m in pos_rb]
        counts = [heights.count(h) for h in range(1, max(heights) + 1)]
        self.exponents: Tuple[int, ...] = tuple(
            sorted(sum(1 for c in counts if c >= j) for j in range(1, counts[0] + 1))
        )

        self.w0_word, self.w0_matrix = self._longest_element()

    # -- form and pairings -------------------------------------------------

    def bilinear(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        g = self.gram
        return sum(xi * sum(g[i][j] * y[j] for j in range(self.rank))
                   for i, xi in enumerate(x))

    def norm_sq(self, x: Sequence[Fraction]) -> Fraction:
        return self.bilinear(x, x)

    def root_norm_sq(self, root: FiniteRoot) -> Fraction:
        return self.bilinear(root.coords, root.coords)

    def coroot_pairing(self, weight: Sequence[Fraction], root: FiniteRoot) -> Fraction:
        """<weight, root_vee> = 2(weight, root)/(root, root)."""
        return 2 * self.bilinear(weight, root.coords) / self.root_norm_sq(root)

    def root_basis_coords(self, root: FiniteRoot) -> Vector:
        """Expansion coefficients of a root over the simple roots."""
        n = self.rank
        return tuple(sum(self._ct_inv[i][j] * root.coords[j] for j in range(n))
                     for i in range(n))

    # -- root bookkeeping --------------------------------------------------

    def is_root(self, root: FiniteRoot) -> bool:
        return root.coords in self._positive_set or (-root).coords in self._positive_set

    def root_sign(self, root: FiniteRoot) -> int:
        if root.coords in self._positive_set:
            return 1
        if (-root).coords in self._positive_set:
            return -1
        raise ValueError(f"{root.coords} is not a root of {self.lie_type}")

    def root_height(self, root: FiniteRoot) -> int:
        sign = self.root_sign(root)
        key = root.coords if sign > 0 else (-root).coords
        return sign * self._height_by_coords[key]

    # -- finite Weyl group -------------------------------------------------

    @lru_cache(maxsize=None)
    def simple_reflection_matrix(self, i: int) -> Matrix:
        """Matrix of s_{alpha_i} acting on fundamental-weight coordinates."""
        n = self.rank
        alpha = self.cartan[i]
        return tuple(
            tuple(Fraction(int(j == k)) - (alpha[j] if k == i else Fraction(0))
                  for k in range(n))
            for j in range(n)
        )

    def identity_matrix(self) -> Matrix:
        n = self.rank
        return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))

    @staticmethod
    def matrix_apply(matrix: Matrix, vec: Sequence[Fraction]) -> Vector:
        return tuple(sum(row[k] * vec[k] for k in range(len(vec))) for row in matrix)

    @staticmethod
    def matrix_mul(a: Matrix, b: Matrix) -> Matrix:
        n = len(a)
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def word_matrix(self, word: Iterable[int]) -> Matrix:
        """Product of simple reflections, 1-based indices, leftmost applied last."""
        m = self.identity_matrix()
        for i in word:
            if not 1 <= i <= self.rank:
                raise IndexError(f"simple reflection index {i} out of 1..{self.rank}")
            m = self.matrix_mul(m, self.simple_reflection_matrix(i - 1))
        return m

    def dominant_representative(self, weight: Sequence[Fraction]) -> Vector:
        """The unique dominant element of the finite Weyl orbit of ``weight``."""
        v = tuple(Fraction(x) for x in weight)
        while True:
            i = next((k for k, c in enumerate(v) if c < 0), None)
            if i is None:
                return v
            v = self.matrix_apply(self.simple_reflection_matrix(i), v)

    def _longest_element(self) -> tuple[Tuple[int, ...], Matrix]:
        word: list[int] = []
        v = tuple(-c for c in self.rho)
        while True:
            i = next((k for k, c in enumerate(v) if c < 0), None)
            if i is None:
                break
            v = self.matrix_apply(self.simple_reflection_matrix(i), v)
            word.append(i + 1)
        word.reverse()  # w0 = s_{i_N} ... s_{i_1}
        return tuple(word), self.word_matrix(word)

    def __repr__(self) -> str:
        return f"RootSystem({self.lie_type})"


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    """Construct (and cache) the root system of the given type."""
    return RootSystem(lie_type)


def height(rs: RootSystem, root: FiniteRoot) -> int:
    """<root, rho_vee>: the sum of the root's simple-root coefficients."""
    h = rs.bilinear(root.coords, rs.rho_check)
    if h.denominator != 1 or not rs.is_root(root):
        raise ValueError(f"{root.coords} is not a root")
    assert int(h) == rs.root_height(root)
    return int(h)


def pairing_finite(rs: RootSystem, weight: Sequence[Fraction], root: FiniteRoot) -> Fraction:
    """Coroot pairing 2(weight, root)/(root, root)."""
    if not rs.is_root(root):
        raise ValueError(f"{root.coords} is not a root")
    return rs.coroot_pairing(weight, root)


def finite_weyl_apply(rs: RootSystem, word: Sequence[int],
                      weight: Sequence[Fraction]) -> Vector:
    """Apply s_{i_1} o ... o s_{i_k} (1-based indices) to a weight."""
    return rs.matrix_apply(rs.word_matrix(word), tuple(Fraction(x) for x in weight))


def same_infinitesimal_character(rs: RootSystem, lam: Sequence[Fraction],
                                 mu: Sequence[Fraction]) -> bool:
    """Whether mu + rho lies in the finite Weyl orbit of lam + rho."""
    shift_l = tuple(Fraction(a) + 1 for a in lam)
    shift_m = tuple(Fraction(a) + 1 for a in mu)
    return rs.dominant_representative(shift_l) == rs.dominant_representative(shift_m)
