"""The rank-2 model algebra on six generators with a straightening rewriter.

Monomials are normal-ordered words z1 < z2 < z12 < z21 < v1 < v2; the
defining relations, oriented toward that order, terminate (each step either
reduces inversions or removes a mixed z1/z2 pair) and are confluent on the
span.  The raising/lowering operators act as half-weight-twisted derivations
determined by their values on generators, and the quantum-twist
anti-involution acts by reversing words and swapping v's with the opposite
composite z's.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import repmodule
from .crystal import Pattern
from .qarith import RatFunc, q_factorial

Z1, Z2, Z12, Z21, V1, V2 = range(6)
GEN_NAMES = ("z1", "z2", "z12", "z21", "v1", "v2")

#: weight of each generator in fundamental coordinates
GEN_WEIGHT = {
    Z1: (-1, 1),
    Z2: (1, -1),
    Z12: (-1, 0),
    Z21: (0, -1),
    V1: (1, 0),
    V2: (0, 1),
}

_Q = RatFunc.monomial(2)
_QINV = RatFunc.monomial(-2)
_ONE = RatFunc.one()

#: adjacent-pair rewrite rules g,h -> sum of coeff * word
_RULES: dict[tuple[int, int], tuple[tuple[RatFunc, tuple[int, ...]], ...]] = {
    (Z1, Z2): ((_Q, (V1, Z12)), (_QINV, (Z21, V2))),
    (Z2, Z1): ((_Q, (V2, Z21)), (_QINV, (Z12, V1))),
    (Z12, Z1): ((_ONE, (Z1, Z12)),),
    (Z12, Z2): ((_Q, (Z2, Z12)),),
    (Z21, Z1): ((_Q, (Z1, Z21)),),
    (Z21, Z2): ((_ONE, (Z2, Z21)),),
    (Z21, Z12): ((_ONE, (Z12, Z21)),),
    (V1, Z1): ((_QINV, (Z1, V1)),),
    (V1, Z2): ((_ONE, (Z2, V1)),),
    (V1, Z12): ((_QINV, (Z12, V1)),),
    (V1, Z21): ((_QINV, (Z21, V1)),),
    (V2, Z1): ((_ONE, (Z1, V2)),),
    (V2, Z2): ((_QINV, (Z2, V2)),),
    (V2, Z12): ((_QINV, (Z12, V2)),),
    (V2, Z21): ((_QINV, (Z21, V2)),),
    (V2, V1): ((_ONE, (V1, V2)),),
}

DEFAULT_FUEL = 1_000_000


@dataclass(frozen=True, slots=True)
class GKMonomial:
    """Exponents of a normal-ordered monomial z1^m1 z2^m2 z12^m12 z21^m21 v1^m01 v2^m02."""

    m1: int
    m2: int
    m12: int
    m21: int
    m01: int
    m02: int

    def __post_init__(self):
        if min(self.entries()) < 0:
            raise ValueError(f"negative exponent in {self}")
        if self.m1 and self.m2:
            raise ValueError(f"mixed z1/z2 exponents are not normal-ordered: {self}")

    def entries(self) -> tuple[int, ...]:
        return (self.m1, self.m2, self.m12, self.m21, self.m01, self.m02)

    def word(self) -> tuple[int, ...]:
        out = []
        for gen, mult in zip(range(6), self.entries()):
            out.extend([gen] * mult)
        return tuple(out)

    def weight(self) -> tuple[int, int]:
        w1 = w2 = 0
        for gen, mult in zip(range(6), self.entries()):
            gw = GEN_WEIGHT[gen]
            w1 += mult * gw[0]
            w2 += mult * gw[1]
        return (w1, w2)

    def degree(self) -> int:
        return sum(self.entries())

    def __str__(self):
        if self.degree() == 0:
            return "1"
        return "*".join(
            GEN_NAMES[g] + (f"^{m}" if m > 1 else "")
            for g, m in zip(range(6), self.entries())
            if m
        )


class GKElement:
    """A finite combination of normal-ordered monomials with RatFunc coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[GKMonomial, RatFunc] | None = None):
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if not c.is_zero()}

    @staticmethod
    def zero() -> "GKElement":
        return GKElement()

    @staticmethod
    def one() -> "GKElement":
        return GKElement({GKMonomial(0, 0, 0, 0, 0, 0): RatFunc.one()})

    @staticmethod
    def generator(g: int) -> "GKElement":
        ent = [0] * 6
        ent[g] = 1
        return GKElement({GKMonomial(*ent): RatFunc.one()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "GKElement") -> "GKElement":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return GKElement(out)

    def __sub__(self, other: "GKElement") -> "GKElement":
        return self + other.scale(RatFunc.scalar(-1))

    def scale(self, factor: RatFunc) -> "GKElement":
        return GKElement({m: c * factor for m, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, GKElement) and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({c})*{m}" for m, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].entries())
        )

    def weight(self) -> tuple[int, int]:
        """Common weight of a homogeneous element; raises if mixed."""
        weights = {m.weight() for m in self.coeffs}
        if len(weights) != 1:
            raise ValueError("element is not weight-homogeneous")
        return weights.pop()

    def to_json(self) -> list:
        return [
            {"monomial": list(m.entries()), "coeff": c.to_json()}
            for m, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].entries())
        ]


def _monomial_of_word(word: tuple[int, ...]) -> GKMonomial:
    ent = [0] * 6
    for g in word:
        ent[g] += 1
    return GKMonomial(*ent)


def normal_form(
    words: dict[tuple[int, ...], RatFunc] | list[tuple[RatFunc, tuple[int, ...]]],
    strategy: str = "leftmost",
    fuel: int = DEFAULT_FUEL,
) -> GKElement:
    """Rewrite a combination of words into normal-ordered monomials.

    `strategy` picks which reducible adjacent pair fires first ("leftmost" or
    "rightmost"); a fuel counter guards against a non-terminating rule set.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if isinstance(words, dict):
        work = [(c, w) for w, c in words.items()]
    else:
        work = list(words)
    done: dict[GKMonomial, RatFunc] = {}
    while work:
        coeff, word = work.pop()
        if coeff.is_zero():
            continue
        positions = range(len(word) - 1)
        if strategy == "rightmost":
            positions = reversed(positions)
        hit = None
        for p in positions:
            rule = _RULES.get((word[p], word[p + 1]))
            if rule is not None:
                hit = (p, rule)
                break
        if hit is None:
            mono = _monomial_of_word(word)
            s = done.get(mono)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                done.pop(mono, None)
            else:
                done[mono] = s
            continue
        fuel -= 1
        if fuel <= 0:
            raise RuntimeError("rewriting fuel exhausted; rule system looped")
        p, rule = hit
        head, tail = word[:p], word[p + 2:]
        for rc, repl in rule:
            work.append((coeff * rc, head + repl + tail))
    return GKElement(done)


def multiply(a: GKElement, b: GKElement, strategy: str = "leftmost") -> GKElement:
    """Concatenate monomial words and straighten."""
    out = GKElement.zero()
    for ma, ca in a.coeffs.items():
        for mb, cb in b.coeffs.items():
            out = out + normal_form([(ca * cb, ma.word() + mb.word())], strategy)
    return out


# -- the module-algebra action ---------------------------------------------------


def _alpha_pair(k: int, weight: tuple[int, int]) -> int:
    """(alpha_k, mu) for mu in fundamental coordinates."""
    return weight[k - 1]


#: generator images under E_k and F_k; missing entries act as zero
_E_TABLE = {
    (1, Z1): V1,
    (2, Z2): V2,
    (1, Z12): Z2,
    (2, Z21): Z1,
}
_F_TABLE = {
    (1, V1): Z1,
    (2, V2): Z2,
    (2, Z1): Z21,
    (1, Z2): Z12,
}


def act_gen(k: int, kind: str, x: GKElement) -> GKElement:
    """E_k or F_k as a half-weight-twisted derivation."""
    if k not in (1, 2):
        raise ValueError(f"index must be 1 or 2, got {k}")
    table = _E_TABLE if kind == "E" else _F_TABLE if kind == "F" else None
    if table is None:
        raise ValueError(f"kind must be 'E' or 'F', got {kind!r}")
    out = GKElement.zero()
    for mono, coeff in x.coeffs.items():
        word = mono.word()
        pre = 0  # (alpha_k, weight of the prefix)
        total = _alpha_pair(k, mono.weight())
        for t, g in enumerate(word):
            g_pair = _alpha_pair(k, GEN_WEIGHT[g])
            image = table.get((k, g))
            if image is not None:
                post = total - pre - g_pair
                exp = post - pre
                new_word = word[:t] + (image,) + word[t + 1:]
                out = out + normal_form([(coeff * RatFunc.monomial(exp), new_word)])
            pre += g_pair
    return out


def act_divided(k: int, kind: str, r: int, x: GKElement) -> GKElement:
    """Divided power: r-fold action divided by the q_k-factorial."""
    if r < 0:
        raise ValueError("divided-power exponent must be nonnegative")
    for _ in range(r):
        x = act_gen(k, kind, x)
    if r > 1:
        x = x.scale(RatFunc.of_poly(q_factorial(r).compose_monomial(2)).inverse())
    return x


def k_scale(k: int, n: int, x: GKElement) -> GKElement:
    """Scale each monomial by v^(n * (alpha_k, weight)): the K_{(n/2)alpha_k} action."""
    out = {}
    for mono, coeff in x.coeffs.items():
        exp = n * _alpha_pair(k, mono.weight())
        out[mono] = coeff * RatFunc.monomial(exp) if exp else coeff
    return GKElement(out)


# -- distinguished basis and the anti-involution ------------------------------------


def b_monomial(m: Pattern) -> GKElement:
    """The scalar-normalized basis monomial for a crystal pattern; zero off
    the crystal."""
    if not m.in_crystal:
        return GKElement.zero()
    exp = (
        m.m1 * (m.m21 - m.m01)
        + m.m2 * (m.m12 - m.m02)
        - (m.m12 + m.m21) * (m.m01 + m.m02)
    )
    mono = GKMonomial(*m.entries())
    return GKElement({mono: RatFunc.monomial(exp)})


_TWIST = {V1: Z21, V2: Z12, Z1: Z1, Z2: Z2, Z12: V2, Z21: V1}


def sigma_hat(x: GKElement, strategy: str = "leftmost") -> GKElement:
    """The anti-involution: reverse each word and map generators through
    v_i -> z_{ji}, z_i -> z_i, z_{ij} -> v_j."""
    words = []
    for mono, coeff in x.coeffs.items():
        twisted = tuple(_TWIST[g] for g in reversed(mono.word()))
        words.append((coeff, twisted))
    return normal_form(words, strategy)


def embed_module(l1: int, l2: int, rmax: int = 2) -> list[dict]:
    """Cross-validate the generator action against the symbolic module:
    divided powers on basis monomials must reproduce the pattern-basis
    coefficients exactly.  Returns a witness list (empty = agreement)."""
    mod = repmodule.ModuleVLambda(l1, l2)
    mismatches = []
    for m in mod.basis:
        for i in (1, 2):
            for kind in ("E", "F"):
                for r in range(1, rmax + 1):
                    gk = act_divided(i, kind, r, b_monomial(m))
                    sym = repmodule.act_divided(i, kind, r, mod.basis_vector(m))
                    expected = GKElement.zero()
                    for target, coeff in sym.coeffs.items():
                        expected = expected + b_monomial(target).scale(coeff)
                    if gk != expected:
                        mismatches.append(
                            {
                                "pattern": str(m),
                                "i": i,
                                "kind": kind,
                                "r": r,
                                "model": str(gk),
                                "module": str(expected),
                            }
                        )
    return mismatches


# -- expression parsing for the CLI ---------------------------------------------------


_TOKEN = re.compile(
    r"\s*(?:(?P<scalar>q\^\{(?P<snum>-?\d+)(?P<shalf>/2)?\})"
    r"|(?P<gen>z12|z21|z1|z2|v1|v2)"
    r"|(?P<int>-?\d+)"
    r"|(?P<op>[*^]))"
)


def parse_expr(text: str) -> GKElement:
    """Parse a product of generators with integer powers and q^{k/2} scalars."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        tokens.append(m)
        pos = m.end()
    coeff = RatFunc.one()
    word: tuple[int, ...] = ()
    idx = 0
    while idx < len(tokens):
        tok = tokens[idx]
        if tok.group("scalar"):
            num = int(tok.group("snum"))
            coeff = coeff * RatFunc.monomial(num if tok.group("shalf") else 2 * num)
        elif tok.group("int"):
            coeff = coeff * RatFunc.scalar(int(tok.group("int")))
        elif tok.group("gen"):
            g = GEN_NAMES.index(tok.group("gen"))
            power = 1
            if idx + 1 < len(tokens) and tokens[idx + 1].group("op") == "^":
                if idx + 2 >= len(tokens) or not tokens[idx + 2].group("int"):
                    raise ValueError("expected an integer power after '^'")
                power = int(tokens[idx + 2].group("int"))
                if power < 0:
                    raise ValueError("generator powers must be nonnegative")
                idx += 2
            word = word + (g,) * power
        idx += 1
    return normal_form([(coeff, word)])
