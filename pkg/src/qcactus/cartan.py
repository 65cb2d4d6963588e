"""Cartan data for finite types: weights, the Weyl action, the bilinear form,
rho-type functionals and extremal-monomial exponents.

Weights live in fundamental-weight coordinates on the semisimple lattice, so
pairing against a simple coroot is a coordinate read-off and the symmetric
form takes exact rational values through the inverse Cartan matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import coxeter
from .coxeter import CoxeterDatum, GroupElement, cartan_matrix_of_type


@dataclass(frozen=True)
class Weight:
    """An integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, n: int) -> "Weight":
        return Weight(tuple(n * a for a in self.coords))

    def __getitem__(self, i: int) -> int:
        """Pairing with the i-th simple coroot (1-based)."""
        return self.coords[i - 1]


def _invert_rational(matrix):
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def _minimal_symmetrizers(a) -> tuple[int, ...]:
    n = len(a)
    d = [0] * n
    for start in range(n):
        if d[start]:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if a[i][j] != 0 and i != j and not d[j]:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * Fraction(a[i][j], a[j][i])
                    stack.append(j)
    lcm_den = 1
    for x in d:
        lcm_den = lcm_den * x.denominator // _gcd(lcm_den, x.denominator)
    ints = [int(x * lcm_den) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class CartanDatum:
    """A finite-type symmetrizable Cartan matrix with minimal symmetrizers."""

    def __init__(self, cartan, cap: int = coxeter.DEFAULT_CAP):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.n = len(self.cartan)
        self._validate()
        self.d = _minimal_symmetrizers(self.cartan)
        self.cartan_inverse = _invert_rational(self.cartan)
        self.coxeter = CoxeterDatum(self.cartan, cap=cap)
        self.indices = tuple(range(1, self.n + 1))

    def _validate(self):
        a = self.cartan
        n = self.n
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError("diagonal Cartan entries must be 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if i != j and (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValueError("zero pattern must be symmetric")
        # finite type: all leading principal minors positive
        m = [[Fraction(x) for x in row] for row in a]
        for k in range(1, n + 1):
            if _det([row[:k] for row in m[:k]]) <= 0:
                raise ValueError("Cartan matrix is not of finite type")

    @staticmethod
    def from_type(name: str, cap: int = coxeter.DEFAULT_CAP) -> "CartanDatum":
        return CartanDatum(cartan_matrix_of_type(name), cap=cap)

    # -- weights -------------------------------------------------------------

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(tuple(1 if j == i else 0 for j in self.indices))

    def simple_root(self, j: int) -> Weight:
        """alpha_j in fundamental-weight coordinates (column j of the Cartan matrix)."""
        return Weight(tuple(self.cartan[i - 1][j - 1] for i in self.indices))

    def rho(self, J=None) -> Weight:
        J = set(self.indices if J is None else J)
        return Weight(tuple(1 if i in J else 0 for i in self.indices))

    def reflect(self, i: int, lam: Weight) -> Weight:
        """s_i(lam) = lam - lam(alpha_i^vee) alpha_i."""
        c = lam[i]
        if c == 0:
            return lam
        return lam - self.simple_root(i).scale(c)

    def root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        """Coordinates of lam in the simple-root basis (rational in general)."""
        inv = self.cartan_inverse
        return tuple(
            sum(inv[j][i] * lam.coords[i] for i in range(self.n)) for j in range(self.n)
        )


def _det(m):
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return sign * det


def pairing(d: CartanDatum, lam: Weight, i: int) -> int:
    """lam(alpha_i^vee), a coordinate read-off."""
    return lam[i]


def form(d: CartanDatum, lam: Weight, mu: Weight) -> Fraction:
    """The W-invariant symmetric form (lam, mu), exact rational."""
    inv = d.cartan_inverse
    total = Fraction(0)
    for i in range(d.n):
        if lam.coords[i]:
            row = inv[i]
            s = sum(row[k] * mu.coords[k] for k in range(d.n) if mu.coords[k])
            total += d.d[i] * lam.coords[i] * s
    return total


def form_with_root(d: CartanDatum, lam: Weight, i: int) -> int:
    """(lam, alpha_i) = d_i lam(alpha_i^vee), always an integer."""
    return d.d[i - 1] * lam[i]


def weyl_act(d: CartanDatum, w: GroupElement, lam: Weight) -> Weight:
    """Apply w through its deterministic reduced word."""
    out = lam
    for i in reversed(coxeter.reduced_word(w)):
        out = d.reflect(i, out)
    return out


def rho_functionals(d: CartanDatum, J, mu: Weight) -> tuple[Fraction, Fraction]:
    """((mu, rho_J), rho_J^vee(mu)).

    rho_J^vee takes the J-root-span component of mu and sums its coefficients;
    it kills everything orthogonal to the alpha_j, j in J.
    """
    J = sorted(set(J))
    rj = d.rho(J)
    value_form = form(d, mu, rj)
    if not J:
        return Fraction(0), Fraction(0)
    # solve sum_j c_j (alpha_j, alpha_i) = (mu, alpha_i) for i in J
    gram = [[Fraction(form(d, d.simple_root(a), d.simple_root(b))) for b in J] for a in J]
    rhs = [Fraction(form_with_root(d, mu, i)) for i in J]
    coeffs = _solve_rational(gram, rhs)
    return value_form, sum(coeffs, Fraction(0))


def _solve_rational(a, b):
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def extremal_exponents(d: CartanDatum, word, lam: Weight) -> tuple[int, ...]:
    """Divided-power exponents (a_1, ..., a_m) of the extremal monomial for a
    reduced word and a dominant weight: a_k is the pairing of the partial
    reflection s_{i_{k+1}} ... s_{i_m}(lam) with alpha_{i_k}^vee."""
    word = tuple(word)
    if not lam.is_dominant:
        raise ValueError(f"weight {lam.coords} is not dominant")
    if coxeter.length(coxeter.from_word(d.coxeter, word)) != len(word):
        raise ValueError(f"word {word} is not reduced")
    exps = [0] * len(word)
    mu = lam
    for k in range(len(word) - 1, -1, -1):
        i = word[k]
        exps[k] = mu[i]
        mu = d.reflect(i, mu)
    return tuple(exps)


@lru_cache(maxsize=None)
def sl3() -> CartanDatum:
    """The rank-2 datum used by the crystal and module layers."""
    return CartanDatum.from_type("A2")
