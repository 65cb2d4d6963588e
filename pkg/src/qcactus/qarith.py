"""Exact arithmetic in Q(v) with v = q^(1/2), and q-combinatorial coefficients.

A LaurentPoly is a finite sum of rational multiples of integer powers of a
single formal variable v.  Half-integral powers of q never appear: every
exponent of q is stored as the doubled exponent of v.  RatFunc is a quotient
of two Laurent polynomials kept in a canonical reduced form, so equality of
values is equality of representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as _int_gcd


def _coeff(x):
    """Normalize a coefficient: Fractions with denominator 1 become ints."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, int):
        return x
    raise TypeError(f"coefficient must be int or Fraction, got {type(x).__name__}")


class LaurentPoly:
    """A Laurent polynomial in v over Q, stored as {exponent: coefficient}.

    Instances are immutable; all operations return new objects.  Stored
    coefficients are never zero.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, a in coeffs.items():
                a = _coeff(a) if not isinstance(a, int) else a
                if a:
                    c[int(k)] = a
        self._c = c
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def monomial(exp: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def const(a) -> "LaurentPoly":
        return LaurentPoly({0: a})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def items(self):
        return self._c.items()

    def coefficient(self, exp: int):
        return self._c.get(exp, 0)

    @property
    def degree(self) -> int:
        """Largest exponent; raises on zero."""
        return max(self._c)

    @property
    def valuation(self) -> int:
        """Smallest exponent; raises on zero."""
        return min(self._c)

    @property
    def span(self) -> int:
        """degree - valuation, or -1 for the zero polynomial."""
        if not self._c:
            return -1
        return max(self._c) - min(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c:
            return other
        if not other._c:
            return self
        c = dict(self._c)
        for k, a in other._c.items():
            s = c.get(k, 0) + a
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k: -a for k, a in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coeff(other)
            if not other:
                return ZERO
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {k: _coeff(a * other) for k, a in self._c.items()}
            out._hash = None
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c or not other._c:
            return ZERO
        if len(other._c) == 1:
            (k2, a2), = other._c.items()
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {k + k2: _coeff(a * a2) for k, a in self._c.items()}
            out._hash = None
            return out
        c = {}
        for k1, a1 in self._c.items():
            for k2, a2 in other._c.items():
                k = k1 + k2
                s = c.get(k, 0) + a1 * a2
                if s:
                    c[k] = s
                else:
                    c.pop(k, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k: _coeff(a) for k, a in c.items()}
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use RatFunc")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if k == 0 or not self._c:
            return self
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: a for e, a in self._c.items()}
        out._hash = None
        return out

    def compose_monomial(self, c: int) -> "LaurentPoly":
        """Substitute v -> v^c (c a nonzero integer)."""
        if c == 0:
            raise ValueError("substitution exponent must be nonzero")
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e * c: a for e, a in self._c.items()}
        out._hash = None
        return out

    def evaluate(self, x: Fraction) -> Fraction:
        """Evaluate at a nonzero rational v = x."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        total = Fraction(0)
        for k, a in self._c.items():
            total += a * x**k
        return total

    def substitute(self, value: "RatFunc") -> "RatFunc":
        """Substitute v -> value, a nonzero rational function."""
        total = RatFunc.zero()
        for k, a in self._c.items():
            total = total + value**k * RatFunc.scalar(a)
        return total

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the remainder is nonzero."""
        q, r = _divmod_poly(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    # -- presentation --------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            a = self._c[k]
            if k == 0:
                parts.append(str(a))
            else:
                mono = "v" if k == 1 else f"v^{k}"
                if a == 1:
                    parts.append(mono)
                elif a == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{a}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def to_json(self) -> list:
        """Ordered [exponent, "p/q"] pairs by ascending exponent."""
        return [[k, str(Fraction(self._c[k]))] for k in sorted(self._c)]

    @staticmethod
    def from_json(data) -> "LaurentPoly":
        return LaurentPoly({int(k): Fraction(s) for k, s in data})


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})


# -- polynomial division and gcd ---------------------------------------------


def _divmod_poly(a: LaurentPoly, b: LaurentPoly):
    """Division with remainder, treating v-units as invertible."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return ZERO, ZERO
    sa, sb = a.valuation, b.valuation
    ra = {k - sa: Fraction(c) for k, c in a.items()}
    rb = {k - sb: Fraction(c) for k, c in b.items()}
    db = max(rb)
    lead_b = rb[db]
    q = {}
    while ra:
        da = max(ra)
        if da < db:
            break
        f = ra[da] / lead_b
        e = da - db
        q[e] = f
        for k, c in rb.items():
            t = ra.get(k + e, Fraction(0)) - f * c
            if t:
                ra[k + e] = t
            else:
                ra.pop(k + e, None)
    quot = LaurentPoly(q).shift(sa - sb)
    rem = LaurentPoly(ra).shift(sa)
    return quot, rem


def _int_list(p: LaurentPoly) -> list[int]:
    """Dense integer coefficient list of p shifted to valuation 0, made primitive."""
    val = p.valuation
    deg = p.degree
    den = 1
    for _, c in p.items():
        if isinstance(c, Fraction):
            den = den * c.denominator // _int_gcd(den, c.denominator)
    out = [0] * (deg - val + 1)
    for k, c in p.items():
        out[k - val] = int(c * den)
    g = 0
    for c in out:
        g = _int_gcd(g, abs(c))
    if g > 1:
        out = [c // g for c in out]
    return out


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
    if g > 1:
        a = [c // g for c in a]
    return a


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q[v] up to v-units, via a primitive pseudo-remainder sequence."""
    if a.is_zero():
        return _monic_unit(b)
    if b.is_zero():
        return _monic_unit(a)
    fa, fb = _int_list(a), _int_list(b)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        # pseudo-remainder of fa by fb
        r = list(fa)
        lead = fb[-1]
        db = len(fb) - 1
        while len(r) - 1 >= db and r:
            dr = len(r) - 1
            c = r[-1]
            r = [x * lead for x in r]
            for i, y in enumerate(fb):
                r[dr - db + i] -= c * y
            r = _trim(r)
        fa, fb = fb, _primitive(_trim(r))
    if len(fa) == 1:
        return ONE
    d = dict(enumerate(fa))
    g = LaurentPoly(d)
    return _monic_unit(g)


def _monic_unit(p: LaurentPoly) -> LaurentPoly:
    """Shift to valuation 0 and divide by the leading coefficient."""
    if p.is_zero():
        return ZERO
    p = p.shift(-p.valuation)
    lead = p.coefficient(p.degree)
    if lead != 1:
        p = p * (Fraction(1) / Fraction(lead))
    return p


# -- rational functions --------------------------------------------------------


class RatFunc:
    """A rational function num/den in canonical form.

    Canonical form: den is an ordinary polynomial in v with nonzero constant
    term and leading coefficient 1, and num/den have no common nonunit factor.
    Equality and hashing are structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _canonical=False):
        if not _canonical:
            c = rf_normalize(num, den)
            num, den = c.num, c.den
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "RatFunc":
        return _RF_ZERO

    @staticmethod
    def one() -> "RatFunc":
        return _RF_ONE

    @staticmethod
    def of_poly(p: LaurentPoly) -> "RatFunc":
        return RatFunc(p, ONE, _canonical=True)

    @staticmethod
    def scalar(a) -> "RatFunc":
        return RatFunc.of_poly(LaurentPoly.const(a))

    @staticmethod
    def monomial(exp: int, coeff=1) -> "RatFunc":
        return RatFunc.of_poly(LaurentPoly.monomial(exp, coeff))

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_poly(self) -> bool:
        return self.den.is_one()

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den is ONE and other.den is ONE or (self.den.is_one() and other.den.is_one()):
            return RatFunc(self.num + other.num, ONE, _canonical=True)
        if self.den == other.den:
            num = self.num + other.num
            g = poly_gcd(num, self.den)
            if g.is_one():
                return _unit_normalize(num, self.den)
            return _unit_normalize(num.divexact(g), self.den.divexact(g))
        # common factor of the two denominators bounds the reduction needed
        d = poly_gcd(self.den, other.den)
        if d.is_one():
            num = self.num * other.den + other.num * self.den
            return _unit_normalize(num, self.den * other.den)
        qa = self.den.divexact(d)
        qb = other.den.divexact(d)
        t = self.num * qb + other.num * qa
        g = poly_gcd(t, d)
        if g.is_one():
            return _unit_normalize(t, qa * other.den)
        return _unit_normalize(t.divexact(g), qa * other.den.divexact(g))

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return _RF_ZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not d2.is_one():
            g = poly_gcd(n1, d2)
            if not g.is_one():
                n1 = n1.divexact(g)
                d2 = d2.divexact(g)
        if not d1.is_one():
            g = poly_gcd(n2, d1)
            if not g.is_one():
                n2 = n2.divexact(g)
                d1 = d1.divexact(g)
        return _unit_normalize(n1 * n2, d1 * d2)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return _unit_normalize(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = _RF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation ----------------------------------------------------------------

    def evaluate(self, x: Fraction) -> Fraction:
        den = self.den.evaluate(x)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at v = {x}")
        if self.num.is_zero():
            return Fraction(0)
        return self.num.evaluate(x) / den

    def order_at_zero(self) -> int:
        """Order of vanishing at v = 0 (negative for a pole); the canonical
        denominator never vanishes at 0."""
        if self.num.is_zero():
            raise ValueError("order at zero of the zero function is undefined")
        return self.num.valuation

    def value_at_zero(self) -> Fraction:
        """Value at v = 0; raises if there is a pole."""
        if self.num.is_zero():
            return Fraction(0)
        if self.num.valuation < 0:
            raise ZeroDivisionError("pole at v = 0")
        return Fraction(self.num.coefficient(0)) / Fraction(self.den.coefficient(0))

    # -- comparisons ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        if self.den.is_one():
            return f"RatFunc({self.num})"
        return f"RatFunc(({self.num})/({self.den}))"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data) -> "RatFunc":
        return RatFunc(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _unit_normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    """Shift v-powers out of den and make it monic; assumes num/den reduced."""
    if num.is_zero():
        return _RF_ZERO
    val = den.valuation
    if val:
        den = den.shift(-val)
        num = num.shift(-val)
    lead = den.coefficient(den.degree)
    if lead != 1:
        inv = Fraction(1) / Fraction(lead)
        den = den * inv
        num = num * inv
    return RatFunc(num, den, _canonical=True)


def rf_normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    """Canonical form of num/den: gcd-reduced, denominator monic with nonzero
    constant term after its v-power is moved into the numerator."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return _RF_ZERO
    g = poly_gcd(num, den)
    if not g.is_one():
        num = num.divexact(g)
        den = den.divexact(g)
    return _unit_normalize(num, den)


_RF_ZERO = RatFunc(ZERO, ONE, _canonical=True)
_RF_ONE = RatFunc(ONE, ONE, _canonical=True)


# -- q-combinatorics -------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPoly:
    """(n)_v = (v^n - v^-n)/(v - v^-1), a symmetric Laurent polynomial."""
    if n < 0:
        return -q_int(-n)
    return LaurentPoly({n - 1 - 2 * j: 1 for j in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    """(n)_v! for n >= 0."""
    if n < 0:
        raise ValueError("q-factorial requires n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial in v; zero when k < 0 or n < k."""
    if k < 0 or n < k:
        return ZERO
    if k == 0 or k == n:
        return ONE
    num = ONE
    for s in range(1, k + 1):
        num = num * q_int(n - s + 1)
    return num.divexact(q_factorial(k))


@dataclass(frozen=True)
class StringTriple:
    """String data (l, k, s): length l, depth k, shift s."""

    l: int
    k: int
    s: int

    @property
    def in_domain(self) -> bool:
        """Whether the shift can act: 0 <= k <= l and k-l <= s <= k."""
        return 0 <= self.k <= self.l and self.k - self.l <= self.s <= self.k


def _eval_factorial_ratio(parts_num, parts_den, at: LaurentPoly) -> RatFunc:
    num = ONE
    for n in parts_num:
        num = num * q_factorial(n)
    den = ONE
    for n in parts_den:
        den = den * q_factorial(n)
    if at.is_monomial() and at.coefficient(at.degree) == 1:
        c = at.degree
        if c == 0:
            raise ValueError("evaluation point must differ from 1")
        return RatFunc(num.compose_monomial(c), den.compose_monomial(c))
    value = RatFunc.of_poly(at)
    return num.substitute(value) / den.substitute(value)


@lru_cache(maxsize=None)
def kash_coeff(kind: str, t: StringTriple, at: LaurentPoly = V) -> RatFunc:
    """String-shift coefficient of the given kind ("low" or "up") evaluated
    at z = at; zero outside the domain."""
    if not t.in_domain:
        return RatFunc.zero()
    if kind == "low":
        return _eval_factorial_ratio([t.k], [t.k - t.s], at)
    if kind == "up":
        return _eval_factorial_ratio([t.l - t.k + t.s], [t.l - t.k], at)
    raise ValueError(f"unknown coefficient kind: {kind!r}")


@lru_cache(maxsize=None)
def kash_coeff_underline(kind: str, t: StringTriple, at: LaurentPoly = V) -> RatFunc:
    """Divided-power normalization of kash_coeff; identically 1 for "low"."""
    if not t.in_domain:
        return RatFunc.zero()
    if kind == "low":
        return RatFunc.one()
    if kind == "up":
        return _eval_factorial_ratio(
            [t.l - t.k + t.s, t.k - t.s], [t.l - t.k, t.k], at
        )
    raise ValueError(f"unknown coefficient kind: {kind!r}")


def cg_coeff(r: int, t: int, c: int, d: int, at: LaurentPoly | None = None) -> LaurentPoly:
    """Correction coefficient C^(r)_t(c, d) of the divided-power action.

    The two branches split on d - c >= r; the zero conventions of q_binomial
    do the rest.  `at` substitutes the q-variable (default q = v^2).
    """
    if r < 1 or t < 1 or t > r:
        raise ValueError(f"need r >= 1 and 1 <= t <= r, got r={r}, t={t}")
    if d - c >= r:
        p = q_binomial(c, t) * q_binomial(d - t, r - t)
    else:
        p = q_binomial(d - c, t) * q_binomial(d - t, r)
    if at is None:
        return p.compose_monomial(2)
    if not (at.is_monomial() and at.coefficient(at.degree) == 1 and at.degree != 0):
        raise ValueError("substitution point must be a nontrivial power of v")
    return p.compose_monomial(at.degree)
