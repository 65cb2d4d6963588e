import random
from fractions import Fraction

import pytest

from qcactus.qarith import (
    LaurentPoly,
    ONE,
    RatFunc,
    StringTriple,
    V,
    ZERO,
    cg_coeff,
    kash_coeff,
    kash_coeff_underline,
    q_binomial,
    q_factorial,
    q_int,
    rf_normalize,
)


def poly(d):
    return LaurentPoly(d)


class TestLaurentPoly:
    def test_zero_coefficients_stripped(self):
        p = poly({3: 0, 1: 2})
        assert p == poly({1: 2})

    def test_identities(self):
        p = poly({2: 1, -1: Fraction(3, 4)})
        assert p + ZERO == p
        assert p * ONE == p
        assert (p - p).is_zero()

    def test_randomized_ring_axioms(self):
        rng = random.Random(0)

        def rnd():
            return poly({rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(4)})

        for _ in range(100):
            a, b, c = rnd(), rnd(), rnd()
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_divexact(self):
        a = poly({2: 1, 0: -1})
        b = poly({1: 1, 0: -1})
        assert a.divexact(b) == poly({1: 1, 0: 1})
        with pytest.raises(ValueError):
            poly({2: 1, 0: 1}).divexact(b)

    def test_evaluate_matches_structure(self):
        p = poly({2: 1, 0: -3, -1: Fraction(1, 2)})
        x = Fraction(3, 2)
        assert p.evaluate(x) == x**2 - 3 + Fraction(1, 2) / x

    def test_serialization_roundtrip(self):
        p = poly({-2: Fraction(1, 3), 5: -4})
        assert LaurentPoly.from_json(p.to_json()) == p
        assert p.to_json() == [[-2, "1/3"], [5, "-4"]]


class TestRatFunc:
    def test_normalize_division_oracle(self):
        # oracle: direct polynomial division
        num = poly({2: 1, 0: -1})
        den = poly({1: 1, 0: -1})
        assert rf_normalize(num, den) == RatFunc.of_poly(num.divexact(den))

    def test_normalize_zero_and_canonical(self):
        assert rf_normalize(ZERO, poly({3: 1})).is_zero()
        p = poly({1: 1, -1: 1})
        assert rf_normalize(p, ONE) == RatFunc.of_poly(p)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            rf_normalize(ONE, ZERO)

    def test_canonical_denominator_shape(self):
        r = RatFunc(poly({0: 7}), poly({3: 2, 5: 4}))
        assert r.den.valuation == 0
        assert r.den.coefficient(0) != 0
        assert r.den.coefficient(r.den.degree) == 1

    def test_field_axioms_with_specialization(self):
        rng = random.Random(1)

        def rnd():
            den = ZERO
            while den.is_zero():
                den = poly({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(3)})
            return RatFunc(poly({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(3)}), den)

        spots = [Fraction(3, 2), Fraction(-5, 7)]
        for _ in range(60):
            a, b, c = rnd(), rnd(), rnd()
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert (a * a.inverse()).is_one()
            for x in spots:
                try:
                    assert (a * b - c).evaluate(x) == a.evaluate(x) * b.evaluate(x) - c.evaluate(x)
                except ZeroDivisionError:
                    pass

    def test_equality_matches_specialization(self):
        a = RatFunc(poly({2: 1, 0: -1}), poly({1: 1, 0: -1}))
        b = RatFunc.of_poly(poly({1: 1, 0: 1}))
        assert a == b
        assert a.evaluate(Fraction(3, 2)) == b.evaluate(Fraction(3, 2))

    def test_value_at_zero(self):
        r = RatFunc(poly({1: 2, 0: 5}), poly({0: 1, 1: 3}))
        assert r.value_at_zero() == 5
        assert r.order_at_zero() == 0
        assert RatFunc.monomial(2).order_at_zero() == 2
        with pytest.raises(ZeroDivisionError):
            RatFunc.monomial(-1).value_at_zero()


class TestQCombinatorics:
    def test_q_int_against_division_oracle(self):
        for n in range(1, 10):
            quotient = poly({n: 1, -n: -1}).divexact(poly({1: 1, -1: -1}))
            assert q_int(n) == quotient

    def test_q_int_examples(self):
        assert q_int(0).is_zero()
        assert q_int(1).is_one()
        assert q_int(3) == poly({2: 1, 0: 1, -2: 1})
        for n in range(8):
            assert q_int(-n) == -q_int(n)

    def test_q_binomial_conventions(self):
        for n in range(7):
            assert q_binomial(n, 0).is_one()
        assert q_binomial(2, 1) == q_int(2)
        assert q_binomial(1, 2).is_zero()
        assert q_binomial(-1, 0).is_zero()
        assert q_binomial(3, -1).is_zero()

    def test_q_binomial_product_oracle(self):
        # oracle: the defining product, evaluated at generic rational points
        x = Fraction(3, 2)
        for n in range(1, 9):
            for k in range(n + 1):
                value = Fraction(1)
                for s in range(1, k + 1):
                    value *= q_int(n - s + 1).evaluate(x) / q_int(s).evaluate(x)
                assert q_binomial(n, k).evaluate(x) == value

    def test_symmetry_and_pascal(self):
        for n in range(10):
            for k in range(n + 1):
                assert q_binomial(n, k) == q_binomial(n, n - k)
        for n in range(1, 10):
            for k in range(1, n):
                assert q_binomial(n, k) == q_binomial(n - 1, k - 1).shift(n - k) + q_binomial(
                    n - 1, k
                ).shift(-k)

    def test_factorial_is_binomial_denominator(self):
        assert q_factorial(0).is_one()
        assert q_factorial(3) == q_int(1) * q_int(2) * q_int(3)
        with pytest.raises(ValueError):
            q_factorial(-1)


class TestStringCoefficients:
    def test_domain(self):
        assert StringTriple(2, 1, 1).in_domain
        assert not StringTriple(1, 2, 0).in_domain
        assert not StringTriple(2, 1, 2).in_domain
        assert not StringTriple(2, 1, -2).in_domain

    def test_examples(self):
        assert kash_coeff("low", StringTriple(2, 1, 1)) == RatFunc.one()
        assert kash_coeff("up", StringTriple(1, 1, 1)) == RatFunc.one()
        assert kash_coeff("low", StringTriple(1, 2, 0)).is_zero()
        assert kash_coeff("up", StringTriple(1, 2, 0)).is_zero()

    def test_underline_examples(self):
        for l in range(5):
            for k in range(l + 1):
                for s in range(k - l, k + 1):
                    assert kash_coeff_underline("low", StringTriple(l, k, s)).is_one()
        expected = RatFunc(ONE, poly({1: 1, -1: 1}))
        assert kash_coeff_underline("up", StringTriple(2, 2, 1)) == expected
        for l in range(8):
            assert kash_coeff_underline("up", StringTriple(l, 0, -l)).is_one()

    def test_underline_from_definition(self):
        # the division normalization times the factorial ratio recovers kash_coeff
        for l in range(6):
            for k in range(l + 1):
                for s in range(k - l, k + 1):
                    for kind in ("low", "up"):
                        lhs = kash_coeff_underline(kind, StringTriple(l, k, s))
                        ratio = RatFunc.of_poly(q_factorial(k - s)) / RatFunc.of_poly(
                            q_factorial(k)
                        )
                        assert lhs == kash_coeff(kind, StringTriple(l, k, s)) * ratio

    def test_symmetry(self):
        for l in range(13):
            for k in range(l + 1):
                for s in range(k - l, k + 1):
                    for kind in ("low", "up"):
                        assert kash_coeff_underline(kind, StringTriple(l, k, s)) == (
                            kash_coeff_underline(kind, StringTriple(l, l - k, -s))
                        )

    def test_composition_law(self):
        for l in range(7):
            for k in range(l + 1):
                for s in range(-l, l + 1):
                    for t in range(-l, l + 1):
                        if s * t < 0:
                            continue
                        for kind in ("low", "up"):
                            assert kash_coeff(kind, StringTriple(l, k, s + t)) == kash_coeff(
                                kind, StringTriple(l, k, s)
                            ) * kash_coeff(kind, StringTriple(l, k - s, t))


class TestCGCoefficient:
    def test_examples(self):
        assert cg_coeff(1, 1, 0, 2).is_zero()
        assert cg_coeff(1, 1, 1, 3).is_one()
        assert cg_coeff(1, 1, 1, 1).is_zero()

    def test_branches_exercise_zero_conventions(self):
        # d - c >= r branch with both binomials nonzero
        assert cg_coeff(2, 1, 1, 4) == (q_binomial(1, 1) * q_binomial(3, 1)).compose_monomial(2)
        # d - c < r branch
        assert cg_coeff(2, 2, 3, 4) == (q_binomial(1, 2) * q_binomial(2, 2)).compose_monomial(2)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            cg_coeff(0, 1, 0, 0)
        with pytest.raises(ValueError):
            cg_coeff(2, 3, 0, 0)

    def test_substitution_point(self):
        assert cg_coeff(1, 1, 1, 3, at=V) == q_binomial(1, 1) * q_binomial(2, 0)
