"""Seeded verification suites driving every relation the library implements.

Each suite returns a list of check records {name, anchor, status, witness?,
seconds}; the CLI assembles them into reports and the test suite asserts on
them.  Anchors state the identity being verified.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from . import cartan, coxeter, crystal, gkmodel, linalg, repmodule
from .cartan import Weight
from .crystal import Pattern
from .qarith import (
    LaurentPoly,
    RatFunc,
    StringTriple,
    kash_coeff,
    kash_coeff_underline,
    q_binomial,
    q_int,
)

COXETER_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "G2", "A1xA1", "A1xA2")


def _run(checks: list, name: str, anchor: str, fn) -> None:
    t0 = time.perf_counter()
    try:
        witness = fn()
        status = "pass" if witness is None else "fail"
    except Exception as exc:  # a crash is a failing check, not a crashed run
        witness = {"error": repr(exc)}
        status = "fail"
    record = {
        "name": name,
        "anchor": anchor,
        "status": status,
        "seconds": round(time.perf_counter() - t0, 4),
    }
    if witness:
        record["witness"] = witness
    checks.append(record)


def _skip(checks: list, name: str, anchor: str, reason: str) -> None:
    checks.append(
        {"name": name, "anchor": anchor, "status": "skipped", "witness": {"reason": reason},
         "seconds": 0.0}
    )


# -- exact arithmetic ------------------------------------------------------------


def qarith_suite(seed: int = 1, samples: int = 80, max_l: int = 12) -> list[dict]:
    checks: list[dict] = []
    rng = random.Random(seed)

    def rnd_poly():
        return LaurentPoly(
            {rng.randint(-5, 5): rng.randint(-6, 6) for _ in range(rng.randint(0, 5))}
        )

    def rnd_rf():
        den = rnd_poly()
        while den.is_zero():
            den = rnd_poly()
        return RatFunc(rnd_poly(), den)

    spots = [Fraction(3, 2), Fraction(-5, 7)] + [
        Fraction(rng.randint(1, 60), rng.randint(1, 60)) * rng.choice((1, -1))
        for _ in range(18)
    ]

    def field_axioms():
        for k in range(samples):
            a, b, c = rnd_rf(), rnd_rf(), rnd_rf()
            if (a + b) + c != a + (b + c):
                return {"law": "add-assoc", "iteration": k}
            if a * (b + c) != a * b + a * c:
                return {"law": "distributive", "iteration": k}
            if (a * b) * c != a * (b * c):
                return {"law": "mul-assoc", "iteration": k}
            if a + b != b + a or a * b != b * a:
                return {"law": "commutative", "iteration": k}
            if not a.is_zero() and not (a * a.inverse()).is_one():
                return {"law": "inverse", "iteration": k}
            for x in spots:
                try:
                    if (a * b + c).evaluate(x) != a.evaluate(x) * b.evaluate(x) + c.evaluate(x):
                        return {"law": "specialization", "at": str(x), "iteration": k}
                except ZeroDivisionError:
                    continue
        return None

    def binomial_symmetry():
        for n in range(13):
            for k in range(n + 1):
                if q_binomial(n, k) != q_binomial(n, n - k):
                    return {"n": n, "k": k}
        return None

    def pascal():
        for n in range(1, 13):
            for k in range(1, n):
                lhs = q_binomial(n, k)
                rhs = q_binomial(n - 1, k - 1).shift(n - k) + q_binomial(n - 1, k).shift(-k)
                if lhs != rhs:
                    return {"n": n, "k": k}
        return None

    def underline_symmetry():
        for l in range(max_l + 1):
            for k in range(l + 1):
                for s in range(k - l, k + 1):
                    for kind in ("low", "up"):
                        a = kash_coeff_underline(kind, StringTriple(l, k, s))
                        b = kash_coeff_underline(kind, StringTriple(l, l - k, -s))
                        if a != b:
                            return {"kind": kind, "l": l, "k": k, "s": s}
        return None

    def composition_law():
        for l in range(max_l + 1):
            for k in range(l + 1):
                for s in range(-l, l + 1):
                    for t in range(-l, l + 1):
                        if s * t < 0:
                            continue
                        for kind in ("low", "up"):
                            lhs = kash_coeff(kind, StringTriple(l, k, s + t))
                            rhs = kash_coeff(kind, StringTriple(l, k, s)) * kash_coeff(
                                kind, StringTriple(l, k - s, t)
                            )
                            if lhs != rhs:
                                return {"kind": kind, "l": l, "k": k, "s": s, "t": t}
        return None

    _run(checks, "field-axioms", "RatFunc is a field, symbolically and at 20 rational points",
         field_axioms)
    _run(checks, "binomial-symmetry", "[n choose k] = [n choose n-k]", binomial_symmetry)
    _run(checks, "pascal", "[n,k] = v^(n-k)[n-1,k-1] + v^(-k)[n-1,k]", pascal)
    _run(checks, "underline-symmetry", "c(l,k,s) = c(l,l-k,-s) after division normalization",
         underline_symmetry)
    _run(checks, "composition-law", "c(l,k,s+t) = c(l,k,s) c(l,k-s,t) for st >= 0",
         composition_law)
    return checks


# -- Coxeter groups ---------------------------------------------------------------


def _subsets(indices):
    items = list(indices)
    for mask in range(1 << len(items)):
        yield frozenset(items[k] for k in range(len(items)) if mask >> k & 1)


def coxeter_suite(seed: int = 1) -> list[dict]:
    checks: list[dict] = []
    rng = random.Random(seed)
    data = {name: coxeter.CoxeterDatum.from_type(name) for name in COXETER_TYPES}

    def kernels():
        for name, d in data.items():
            for J in _subsets(d.indices):
                a = coxeter.kernel_parabolic(d, J, "formula")
                b = coxeter.kernel_parabolic(d, J, "bruteforce")
                if a != b:
                    return {"type": name, "J": sorted(J)}
        return None

    def intersections():
        for name, d in data.items():
            groups = {J: frozenset(d.subgroup_elements(J)) for J in _subsets(d.indices)}
            for J in groups:
                for K in groups:
                    if groups[J] & groups[K] != groups[J & K]:
                        return {"type": name, "J": sorted(J), "K": sorted(K)}
        return None

    def factorization():
        for name, d in data.items():
            for J in _subsets(d.indices):
                closure, _, perp = coxeter.topology(d, J)
                if closure != J:
                    continue
                wj = d.subgroup_elements(J)
                wperp = d.subgroup_elements(perp)
                products = {}
                for u in wj:
                    for u2 in wperp:
                        key = (u * u2).matrix
                        if key in products:
                            return {"type": name, "J": sorted(J), "collision": True}
                        products[key] = (u, u2)
                if len(products) != len(d.elements()):
                    return {"type": name, "J": sorted(J), "incomplete": True}
        return None

    def reduced_words():
        for name, d in data.items():
            elements = list(d.elements())
            sample = elements if len(elements) <= 60 else rng.sample(elements, 60)
            for w in sample:
                word = coxeter.reduced_word(w)
                if len(word) != coxeter.length(w):
                    return {"type": name, "word": word}
                if coxeter.from_word(d, word) != w:
                    return {"type": name, "word": word, "roundtrip": False}
        return None

    def star():
        for name, d in data.items():
            for J in _subsets(d.indices):
                if not J:
                    continue
                for j in J:
                    js = coxeter.star_involution(d, J, j)
                    if coxeter.star_involution(d, J, js) != j:
                        return {"type": name, "J": sorted(J), "j": j}
                for j in J:
                    for k in J:
                        js = coxeter.star_involution(d, J, j)
                        ks = coxeter.star_involution(d, J, k)
                        if d.m[js - 1][ks - 1] != d.m[j - 1][k - 1]:
                            return {"type": name, "J": sorted(J), "pair": (j, k)}
        return None

    _run(checks, "kernel-agreement", "coset-action kernel: formula = brute force, all J",
         kernels)
    _run(checks, "parabolic-intersections", "W_J intersect W_K = W_(J cap K)", intersections)
    _run(checks, "closed-factorization", "closed J: W = W_J x W_(J perp), uniquely",
         factorization)
    _run(checks, "reduced-words", "reduced_word has length l(w) and reassembles to w",
         reduced_words)
    _run(checks, "star-involution", "j -> j* is an involution preserving the orders m",
         star)
    return checks


# -- crystal combinatorics -----------------------------------------------------------


def _random_pattern(rng, bound=20):
    if rng.random() < 0.5:
        m1, m2 = rng.randint(0, bound), 0
    else:
        m1, m2 = 0, rng.randint(0, bound)
    return Pattern(m1, m2, *(rng.randint(-bound, bound) for _ in range(4)))


def weyl_dimension(l1: int, l2: int) -> int:
    """Independent dimension oracle: the Weyl formula over the positive roots."""
    d = cartan.sl3()
    lam_rho = Weight((l1 + 1, l2 + 1))
    rho = d.rho()
    num = den = Fraction(1)
    for root in d.coxeter.positive_roots:
        alpha = Weight((0, 0))
        for j, c in enumerate(root, start=1):
            if c:
                alpha = alpha + d.simple_root(j).scale(c)
        num *= cartan.form(d, lam_rho, alpha)
        den *= cartan.form(d, rho, alpha)
    value = num / den
    assert value.denominator == 1
    return int(value)


def crystal_suite(seed: int = 1, samples: int = 10_000) -> list[dict]:
    checks: list[dict] = []
    rng = random.Random(seed)

    def operator_identities():
        for it in range(samples):
            m = _random_pattern(rng)
            r, s = rng.randint(-10, 10), rng.randint(-10, 10)
            i = rng.choice((1, 2))
            j = 3 - i
            if crystal.e_pow(i, r, crystal.e_pow(i, s, m)) != crystal.e_pow(i, r + s, m):
                return {"law": "composition", "m": str(m), "i": i, "r": r, "s": s}
            lhs = crystal.e_pow(1, r, crystal.e_pow(2, r + s, crystal.e_pow(1, s, m)))
            rhs = crystal.e_pow(2, s, crystal.e_pow(1, r + s, crystal.e_pow(2, r, m)))
            if lhs != rhs:
                return {"law": "verma", "m": str(m), "r": r, "s": s}
            image = crystal.e_pow(i, r, m)
            if (image.l1, image.l2) != (m.l1, m.l2):
                return {"law": "component", "m": str(m), "i": i, "r": r}
        return None

    def involution_identities():
        for it in range(samples):
            m = _random_pattern(rng)
            r = rng.randint(-10, 10)
            i = rng.choice((1, 2))
            j = 3 - i
            if crystal.sigma_i(i, crystal.sigma_i(i, m)) != m:
                return {"law": "involution", "m": str(m), "i": i}
            if crystal.sigma_i(i, crystal.e_pow(i, r, m)) != crystal.e_pow(
                i, -r, crystal.sigma_i(i, m)
            ):
                return {"law": "sigma-e", "m": str(m), "i": i, "r": r}
            if crystal.sigma_outer(crystal.e_pow(i, r, m)) != crystal.e_pow(
                j, -r, crystal.sigma_outer(m)
            ):
                return {"law": "outer-e", "m": str(m), "i": i, "r": r}
            if crystal.sigma_i(1, crystal.sigma_i(2, crystal.sigma_i(1, m))) != crystal.sigma_i(
                2, crystal.sigma_i(1, crystal.sigma_i(2, m))
            ):
                return {"law": "braid", "m": str(m)}
            if crystal.sigma_i(i, crystal.sigma_outer(m)) != crystal.sigma_outer(
                crystal.sigma_i(j, m)
            ):
                return {"law": "mixed", "m": str(m), "i": i}
            if crystal.sigma_outer(crystal.sigma_outer(m)) != m:
                return {"law": "outer-involution", "m": str(m)}
        return None

    def bijection_roundtrip():
        for it in range(samples):
            m = _random_pattern(rng)
            if crystal.khat_inv(crystal.khat(m)) != m:
                return {"m": str(m)}
        return None

    def component_count():
        for l1 in range(13):
            for l2 in range(13 - l1):
                expected = (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) // 2
                if weyl_dimension(l1, l2) != expected:
                    return {"l1": l1, "l2": l2, "oracle": "weyl"}
                if len(crystal.enumerate_component(l1, l2)) != expected:
                    return {"l1": l1, "l2": l2, "oracle": "enumeration"}
        return None

    def zero_weight_count():
        for l1 in range(11):
            for l2 in range(11 - l1):
                count = sum(
                    1
                    for m in crystal.enumerate_component(l1, l2)
                    if crystal.weight_pair(m) == (0, 0)
                )
                expected = min(l1, l2) + 1 if (l1 - l2) % 3 == 0 else 0
                if count != expected:
                    return {"l1": l1, "l2": l2, "count": count, "expected": expected}
        return None

    _run(checks, "string-operators",
         "e_i^r e_i^s = e_i^(r+s); the Verma relation; components preserved",
         operator_identities)
    _run(checks, "involutions",
         "involutivity, conjugation of e_i^r, braid and mixed relations",
         involution_identities)
    _run(checks, "array-bijection", "pattern <-> array roundtrip", bijection_roundtrip)
    _run(checks, "component-count",
         "|component(l1,l2)| = (l1+1)(l2+1)(l1+l2+2)/2, against the Weyl formula",
         component_count)
    _run(checks, "zero-weight-count",
         "zero-weight multiplicity min(l1,l2)+1 when l1 = l2 mod 3, else 0",
         zero_weight_count)
    return checks


# -- the symbolic modules ----------------------------------------------------------------


def _lambdas(max_degree: int):
    for total in range(max_degree + 1):
        for l1 in range(total + 1):
            yield (l1, total - l1)


def _columns(mod, fn) -> list[repmodule.ModuleVector]:
    return [fn(mod.basis_vector(m)) for m in mod.basis]


def _apply_columns(cols, vec):
    mod = vec.module
    out = mod.zero()
    for m, c in vec.coeffs.items():
        out = out + cols[mod.index[m]].scale(c)
    return out


def _compose(cols_outer, cols_inner):
    return [_apply_columns(cols_outer, v) for v in cols_inner]


def _cols_equal(a, b) -> bool:
    return all(x == y for x, y in zip(a, b))


def _is_identity_cols(mod, cols) -> bool:
    return all(cols[k] == mod.basis_vector(m) for k, m in enumerate(mod.basis))


def relations_suite(max_degree: int = 4) -> list[dict]:
    """The quantum-relation gate on every module up to the degree bound."""
    checks: list[dict] = []
    for l1, l2 in _lambdas(max_degree):
        mod = repmodule.ModuleVLambda(l1, l2)
        for rec in repmodule.quantum_relations_check(mod):
            rec = dict(rec)
            rec["name"] = f"relations({l1},{l2}):{rec['name']}"
            rec.setdefault("seconds", 0.0)
            checks.append(rec)
    return checks


def sigma_suite(max_degree: int = 4, seed: int = 1) -> list[dict]:
    checks: list[dict] = []
    modules = {lam: repmodule.ModuleVLambda(*lam) for lam in _lambdas(max_degree)}

    def three_way():
        for (l1, l2), mod in modules.items():
            for i in (1, 2):
                n_cols = [mod.matrix(f"N{i}").apply(mod.basis_vector(m)) for m in mod.basis]
                for k, m in enumerate(mod.basis):
                    b = mod.basis_vector(m)
                    s_string = repmodule.sigma_string(i, b)
                    if s_string != n_cols[k]:
                        return {"lambda": [l1, l2], "i": i, "m": str(m), "pair": "string/N"}
                    s_norm = repmodule.sigma_J((i,), b)
                    if s_string != s_norm:
                        return {"lambda": [l1, l2], "i": i, "m": str(m), "pair": "string/T"}
        return None

    def involutions():
        for (l1, l2), mod in modules.items():
            for J in ((1,), (2,), (1, 2)):
                cols = _columns(mod, lambda b, J=J: repmodule.sigma_J(J, b))
                if not _is_identity_cols(mod, _compose(cols, cols)):
                    return {"lambda": [l1, l2], "J": list(J)}
        return None

    def conjugation():
        for (l1, l2), mod in modules.items():
            full = _columns(mod, lambda b: repmodule.sigma_J((1, 2), b))
            one = _columns(mod, lambda b: repmodule.sigma_J((1,), b))
            two = _columns(mod, lambda b: repmodule.sigma_J((2,), b))
            if not _cols_equal(_compose(full, one), _compose(two, full)):
                return {"lambda": [l1, l2], "relation": "sigma^I sigma^1 = sigma^2 sigma^I"}
            if not _cols_equal(_compose(full, two), _compose(one, full)):
                return {"lambda": [l1, l2], "relation": "sigma^I sigma^2 = sigma^1 sigma^I"}
        return None

    def braid():
        for (l1, l2), mod in modules.items():
            for sign in ("+", "-"):
                t1 = _columns(mod, lambda b, s=sign: repmodule.lusztig_T(1, s, b))
                t2 = _columns(mod, lambda b, s=sign: repmodule.lusztig_T(2, s, b))
                lhs = _compose(t1, _compose(t2, t1))
                rhs = _compose(t2, _compose(t1, t2))
                if not _cols_equal(lhs, rhs):
                    return {"lambda": [l1, l2], "sign": sign}
        return None

    def weight_bookkeeping():
        for (l1, l2), mod in modules.items():
            d = mod.datum
            for m in mod.basis:
                b = mod.basis_vector(m)
                beta = mod.weight_of(m)
                for i in (1, 2):
                    img = repmodule.act_divided(i, "E", 1, b)
                    target = beta + d.simple_root(i)
                    if any(mod.weight_of(mm) != target for mm in img.coeffs):
                        return {"lambda": [l1, l2], "op": "E", "i": i, "m": str(m)}
                    timg = repmodule.lusztig_T(i, "+", b)
                    starget = d.reflect(i, beta)
                    if any(mod.weight_of(mm) != starget for mm in timg.coeffs):
                        return {"lambda": [l1, l2], "op": "T", "i": i, "m": str(m)}
        return None

    def crystal_shadow():
        for (l1, l2), mod in modules.items():
            for i in (1, 2):
                n = mod.matrix(f"N{i}")
                for col, m in enumerate(mod.basis):
                    lead_row = mod.index[crystal.sigma_i(i, m)]
                    for row, entry in n.column(col).items():
                        if row == lead_row:
                            delta = entry - RatFunc.one()
                            if not delta.is_zero() and delta.order_at_zero() <= 0:
                                return {"lambda": [l1, l2], "i": i, "m": str(m),
                                        "entry": str(entry)}
                        elif entry.order_at_zero() <= 0:
                            return {"lambda": [l1, l2], "i": i, "m": str(m), "row": row,
                                    "entry": str(entry)}
        return None

    def extremal_checks():
        d = cartan.sl3()
        dc = d.coxeter
        w0_words = ((1, 2, 1), (2, 1, 2))
        for lam in ((1, 0), (0, 1), (1, 1), (2, 2)):
            mod = modules.get(lam) or repmodule.ModuleVLambda(*lam)
            weight = Weight(lam)
            vectors = []
            for word in w0_words:
                exps = cartan.extremal_exponents(d, word, weight)
                v = mod.highest_vector()
                for k in range(len(word) - 1, -1, -1):
                    v = repmodule.act_divided(word[k], "F", exps[k], v)
                vectors.append(v)
            if vectors[0] != vectors[1]:
                return {"lambda": list(lam), "law": "reduced-word independence"}
        mod = modules[(1, 1)]
        for w in dc.elements():
            ev = repmodule.extremal_vector(w, mod)
            for i in (1, 2):
                if repmodule.sigma_J((i,), ev) != repmodule.extremal_vector(
                    dc.generators[i] * w, mod
                ):
                    return {"law": "sigma translation", "w": coxeter.reduced_word(w), "i": i}
        # linear independence of the extremal family
        rows = []
        family = [repmodule.extremal_vector(w, mod) for w in dc.elements()]
        distinct = []
        for v in family:
            if all(v != u for u in distinct):
                distinct.append(v)
        for v in distinct:
            rows.append([v.coefficient(m) for m in mod.basis])
        if linalg.rank(rows) != len(distinct):
            return {"law": "extremal independence", "rank": linalg.rank(rows)}
        return None

    def extremal_T():
        mod = modules[(1, 1)]
        d = mod.datum
        dc = d.coxeter
        lam = mod.highest_weight
        rho = d.rho()
        for w in dc.elements():
            for w2 in dc.elements():
                if coxeter.length(w * w2) != coxeter.length(w) + coxeter.length(w2):
                    continue
                ev = repmodule.extremal_vector(w2, mod)
                lhs = repmodule.lusztig_T_word(coxeter.reduced_word(w), "+", ev)
                exponent = cartan.form(d, cartan.weyl_act(d, w2, lam), rho) - cartan.form(
                    d, cartan.weyl_act(d, w2, lam), cartan.weyl_act(d, w.inverse(), rho)
                )
                if exponent.denominator != 1:
                    return {"law": "T-extremal exponent", "w": coxeter.reduced_word(w)}
                rhs = repmodule.extremal_vector(w * w2, mod).scale(
                    RatFunc.monomial(int(exponent))
                )
                if lhs != rhs:
                    return {
                        "law": "T-extremal",
                        "w": coxeter.reduced_word(w),
                        "w2": coxeter.reduced_word(w2),
                    }
        return None

    def degree_bookkeeping():
        d = cartan.sl3()
        dc = d.coxeter
        for lam in ((1, 0), (2, 1), (3, 2)):
            weight = Weight(lam)
            for w in dc.elements():
                word = coxeter.reduced_word(w)
                exps = cartan.extremal_exponents(d, word, weight)
                total = Weight((0, 0))
                for i, a in zip(word, exps):
                    total = total + d.simple_root(i).scale(a)
                if total != weight - cartan.weyl_act(d, w, weight):
                    return {"lambda": list(lam), "w": word}
        return None

    def word_independence_operators():
        d = cartan.sl3()
        dc = d.coxeter
        for lam in ((1, 1), (2, 1)):
            mod = modules.get(lam) or repmodule.ModuleVLambda(*lam)
            weight = Weight(lam)
            for w in dc.elements():
                words = _all_reduced_words(dc, w)
                if len(words) < 2:
                    continue
                images = []
                for word in words:
                    exps = cartan.extremal_exponents(d, word, weight)
                    cols = []
                    for m in mod.basis:
                        v = mod.basis_vector(m)
                        for k in range(len(word) - 1, -1, -1):
                            v = repmodule.act_divided(word[k], "F", exps[k], v)
                        cols.append(v)
                    images.append(cols)
                for other in images[1:]:
                    if not _cols_equal(images[0], other):
                        return {"lambda": list(lam), "w": words[0]}
        return None

    _run(checks, "three-way-agreement",
         "string flips = conjugated permutation = normalized braid symmetry",
         three_way)
    _run(checks, "involutions", "sigma^J o sigma^J = 1 for J in {1},{2},{1,2}", involutions)
    _run(checks, "star-conjugation", "sigma^I sigma^K = sigma^(K*) sigma^I", conjugation)
    _run(checks, "T-braid", "T1 T2 T1 = T2 T1 T2, both signs", braid)
    _skip(checks, "orthogonal-union",
          "sigma^(J u J') = sigma^J sigma^J' for orthogonal J, J'",
          "vacuous in rank 2: no orthogonal pair of nonempty subsets")
    _run(checks, "weight-bookkeeping",
         "E_i raises weight by alpha_i; T_i maps the beta space to s_i(beta)",
         weight_bookkeeping)
    _run(checks, "crystal-shadow",
         "N columns specialize at v=0 to the crystal involution",
         crystal_shadow)
    _run(checks, "extremal-vectors",
         "reduced-word independence, sigma translation, linear independence",
         extremal_checks)
    _run(checks, "T-extremal",
         "T_w on extremal vectors with additive lengths gains the half-weight power",
         extremal_T)
    _run(checks, "degree-bookkeeping", "sum a_k alpha_(i_k) = lambda - w lambda",
         degree_bookkeeping)
    _run(checks, "operator-word-independence",
         "divided-power descents agree for all reduced words",
         word_independence_operators)
    return checks


def sigma_suite_single(l1: int, l2: int) -> list[dict]:
    """Per-module involution checks for the CLI verify command."""
    checks: list[dict] = []
    mod = repmodule.ModuleVLambda(l1, l2)

    def three_way():
        for i in (1, 2):
            n = mod.matrix(f"N{i}")
            for m in mod.basis:
                b = mod.basis_vector(m)
                s_string = repmodule.sigma_string(i, b)
                if s_string != n.apply(b):
                    return {"i": i, "m": str(m), "pair": "string/N"}
                if s_string != repmodule.sigma_J((i,), b):
                    return {"i": i, "m": str(m), "pair": "string/T"}
        return None

    def involutions():
        for J in ((1,), (2,), (1, 2)):
            cols = _columns(mod, lambda b, J=J: repmodule.sigma_J(J, b))
            if not _is_identity_cols(mod, _compose(cols, cols)):
                return {"J": list(J)}
        return None

    def conjugation():
        full = _columns(mod, lambda b: repmodule.sigma_J((1, 2), b))
        one = _columns(mod, lambda b: repmodule.sigma_J((1,), b))
        two = _columns(mod, lambda b: repmodule.sigma_J((2,), b))
        if not _cols_equal(_compose(full, one), _compose(two, full)):
            return {"relation": "sigma^I sigma^1 = sigma^2 sigma^I"}
        if not _cols_equal(_compose(full, two), _compose(one, full)):
            return {"relation": "sigma^I sigma^2 = sigma^1 sigma^I"}
        return None

    def braid():
        for sign in ("+", "-"):
            t1 = _columns(mod, lambda b, s=sign: repmodule.lusztig_T(1, s, b))
            t2 = _columns(mod, lambda b, s=sign: repmodule.lusztig_T(2, s, b))
            if not _cols_equal(_compose(t1, _compose(t2, t1)), _compose(t2, _compose(t1, t2))):
                return {"sign": sign}
        return None

    _run(checks, f"three-way-agreement({l1},{l2})",
         "string flips = conjugated permutation = normalized braid symmetry", three_way)
    _run(checks, f"involutions({l1},{l2})", "sigma^J o sigma^J = 1", involutions)
    _run(checks, f"star-conjugation({l1},{l2})", "sigma^I sigma^K = sigma^(K*) sigma^I",
         conjugation)
    _run(checks, f"T-braid({l1},{l2})", "T1 T2 T1 = T2 T1 T2, both signs", braid)
    return checks


def _all_reduced_words(dc, w):
    lw = coxeter.length(w)
    if lw == 0:
        return [()]
    out = []
    for i in range(1, dc.n + 1):
        u = dc.generators[i] * w
        if coxeter.length(u) < lw:
            out.extend([(i,) + rest for rest in _all_reduced_words(dc, u)])
    return out


def conjecture_task(lam: tuple[int, int]) -> dict:
    """One sweep task: build the module, verify involutivity and the sixth-power
    identity of the composed involutions, exactly."""
    l1, l2 = lam
    t0 = time.perf_counter()
    mod = repmodule.ModuleVLambda(l1, l2)
    checks: list[dict] = []

    def involution(i):
        def fn():
            n = mod.matrix(f"N{i}").rows
            if not linalg.is_identity(linalg.mat_mul(n, n)):
                return {"lambda": [l1, l2], "i": i}
            return None

        return fn

    def cube():
        m = linalg.mat_mul(mod.matrix("N1").rows, mod.matrix("N2").rows)
        m3 = linalg.mat_mul(linalg.mat_mul(m, m), m)
        if not linalg.is_identity(m3):
            return {"lambda": [l1, l2]}
        return None

    def braid():
        n1, n2 = mod.matrix("N1").rows, mod.matrix("N2").rows
        lhs = linalg.mat_mul(n1, linalg.mat_mul(n2, n1))
        rhs = linalg.mat_mul(n2, linalg.mat_mul(n1, n2))
        if lhs != rhs:
            return {"lambda": [l1, l2]}
        return None

    _run(checks, f"involution-N1({l1},{l2})", "(N1)^2 = 1", involution(1))
    _run(checks, f"involution-N2({l1},{l2})", "(N2)^2 = 1", involution(2))
    _run(checks, f"braid({l1},{l2})", "N1 N2 N1 = N2 N1 N2", braid)
    _run(checks, f"cube({l1},{l2})", "(N1 N2)^3 = 1", cube)
    return {
        "lambda": [l1, l2],
        "dim": mod.dim,
        "checks": checks,
        "seconds": round(time.perf_counter() - t0, 4),
    }


def gk_suite(seed: int = 1, words: int = 1000) -> list[dict]:
    checks: list[dict] = []
    rng = random.Random(seed)

    def rnd_word(maxlen=6):
        return tuple(rng.randrange(6) for _ in range(rng.randint(0, maxlen)))

    def rnd_monomial(maxdeg=3):
        return gkmodel.normal_form([(RatFunc.one(), rnd_word(maxdeg))])

    def confluence():
        for k in range(words):
            w = rnd_word()
            a = gkmodel.normal_form([(RatFunc.one(), w)], "leftmost")
            b = gkmodel.normal_form([(RatFunc.one(), w)], "rightmost")
            if a != b:
                return {"word": [gkmodel.GEN_NAMES[g] for g in w]}
        return None

    def associativity():
        for k in range(words):
            a, b, c = rnd_monomial(), rnd_monomial(), rnd_monomial()
            if gkmodel.multiply(gkmodel.multiply(a, b), c) != gkmodel.multiply(
                a, gkmodel.multiply(b, c)
            ):
                return {"iteration": k}
        return None

    def anti_homomorphism():
        for k in range(words):
            a, b = rnd_monomial(), rnd_monomial()
            if gkmodel.sigma_hat(gkmodel.multiply(a, b)) != gkmodel.multiply(
                gkmodel.sigma_hat(b), gkmodel.sigma_hat(a)
            ):
                return {"iteration": k}
        return None

    def involution_and_grading():
        for k in range(words):
            a = rnd_monomial(4)
            if gkmodel.sigma_hat(gkmodel.sigma_hat(a)) != a:
                return {"iteration": k, "law": "involution"}
            for mono in a.coeffs:
                w = mono.weight()
                img = gkmodel.sigma_hat(gkmodel.GKElement({mono: RatFunc.one()}))
                if not img.is_zero() and img.weight() != (-w[1], -w[0]):
                    return {"iteration": k, "law": "grading"}
        return None

    def basis_compatibility():
        for l1 in range(5):
            for l2 in range(5 - l1):
                for m in crystal.enumerate_component(l1, l2):
                    if sum(m.entries()) > 4:
                        continue
                    if gkmodel.sigma_hat(gkmodel.b_monomial(m)) != gkmodel.b_monomial(
                        crystal.sigma_outer(m)
                    ):
                        return {"m": str(m)}
        return None

    def embedding():
        mismatches = gkmodel.embed_module(1, 1, rmax=2)
        if mismatches:
            return mismatches[0]
        return None

    def product_support():
        basis11 = {mono for m in crystal.enumerate_component(1, 1)
                   for mono in gkmodel.b_monomial(m).coeffs}
        for ma in crystal.enumerate_component(1, 0):
            for mb in crystal.enumerate_component(0, 1):
                prod = gkmodel.multiply(gkmodel.b_monomial(ma), gkmodel.b_monomial(mb))
                for mono in prod.coeffs:
                    if mono not in basis11:
                        return {"a": str(ma), "b": str(mb), "monomial": str(mono)}
        return None

    def operator_relations():
        for k in range(200):
            x = rnd_monomial(4)
            if x.is_zero():
                continue
            for i in (1, 2):
                for j in (1, 2):
                    lhs = gkmodel.act_gen(i, "E", gkmodel.act_gen(j, "F", x)) - gkmodel.act_gen(
                        j, "F", gkmodel.act_gen(i, "E", x)
                    )
                    if i == j:
                        rhs = gkmodel.GKElement.zero()
                        for mono, c in x.coeffs.items():
                            n = gkmodel._alpha_pair(i, mono.weight())
                            rhs = rhs + gkmodel.GKElement(
                                {mono: c * RatFunc.of_poly(q_int(n).compose_monomial(2))}
                            )
                    else:
                        rhs = gkmodel.GKElement.zero()
                    if lhs != rhs:
                        return {"iteration": k, "relation": "[E,F]", "i": i, "j": j}
            for i in (1, 2):
                j = 3 - i
                for kind in ("E", "F"):
                    total = gkmodel.GKElement.zero()
                    for r in range(3):
                        s = 2 - r
                        term = gkmodel.act_divided(
                            i, kind, r,
                            gkmodel.act_gen(j, kind, gkmodel.act_divided(i, kind, s, x)),
                        )
                        total = total + (term if r % 2 == 0 else term.scale(RatFunc.scalar(-1)))
                    if not total.is_zero():
                        return {"iteration": k, "relation": "serre", "kind": kind, "i": i}
        return None

    _run(checks, "confluence", "normal form independent of reduction order", confluence)
    _run(checks, "associativity", "straightened product is associative", associativity)
    _run(checks, "anti-homomorphism", "twist reverses products", anti_homomorphism)
    _run(checks, "twist-involution", "twist squares to the identity and flips the grading",
         involution_and_grading)
    _run(checks, "basis-compatibility", "twist permutes the distinguished basis",
         basis_compatibility)
    _run(checks, "module-embedding", "generator action matches the symbolic module",
         embedding)
    _run(checks, "product-of-components", "component products land in the sum component",
         product_support)
    _run(checks, "operator-relations", "[E,F] and Serre hold for the derivation action",
         operator_relations)
    return checks


def module_suite(seed: int = 1, max_degree: int = 4) -> list[dict]:
    return relations_suite(max_degree) + sigma_suite(max_degree, seed)


SUITES = {
    "qarith": lambda seed: qarith_suite(seed),
    "coxeter": lambda seed: coxeter_suite(seed),
    "crystal": lambda seed: crystal_suite(seed),
    "module": lambda seed: module_suite(seed),
    "gk": lambda seed: gk_suite(seed),
}


def run_suite(name: str, seed: int = 1) -> list[dict]:
    if name == "all":
        out = []
        for key in ("qarith", "coxeter", "crystal", "module", "gk"):
            for rec in SUITES[key](seed):
                rec = dict(rec)
                rec["name"] = f"{key}:{rec['name']}"
                out.append(rec)
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](seed)
