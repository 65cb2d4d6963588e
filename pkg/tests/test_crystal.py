import random

import pytest

from qcactus import crystal as cr
from qcactus.crystal import GTArray, Pattern
from qcactus.suites import weyl_dimension


def random_pattern(rng, bound=20):
    if rng.random() < 0.5:
        m1, m2 = rng.randint(0, bound), 0
    else:
        m1, m2 = 0, rng.randint(0, bound)
    return Pattern(m1, m2, *(rng.randint(-bound, bound) for _ in range(4)))


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern(1, 1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        Pattern(-1, 0, 0, 0, 0, 0)
    m = Pattern(0, 2, -1, 3, -2, 1)
    assert (m.l1, m.l2) == (1, 2)
    assert not m.in_crystal


def test_pattern_text_roundtrip():
    m = Pattern(0, 2, -1, 3, -2, 1)
    assert Pattern.parse(str(m)) == m
    with pytest.raises(ValueError):
        Pattern.parse("1,2,3")


def test_weights():
    m = Pattern(0, 0, 0, 0, 3, 2)
    assert cr.weight_pair(m) == (3, 2)
    assert cr.wt(1, Pattern(1, 0, 0, 0, 0, 0)) == -1


def test_e_pow_examples():
    assert cr.e_pow(1, 1, Pattern(1, 0, 0, 0, 0, 0)) == Pattern(0, 0, 0, 0, 1, 0)
    m = Pattern(0, 2, 1, 3, 0, 1)
    assert cr.e_pow(1, 0, m) == m
    assert cr.e_pow(2, 0, m) == m


def test_e_pow_on_arrays():
    # the array coordinates turn e_2^r into a translation of the second entry
    rng = random.Random(4)
    for _ in range(400):
        m = random_pattern(rng)
        r = rng.randint(-8, 8)
        g = cr.khat(m)
        img = cr.khat(cr.e_pow(2, r, m))
        assert img == GTArray(g.a1, g.a2 - r, g.a3, g.l1, g.l2)


def test_sigma_outer_examples():
    assert cr.sigma_outer(Pattern(0, 0, 0, 0, 1, 0)) == Pattern(0, 0, 0, 1, 0, 0)
    m = Pattern(1, 0, 0, 0, 0, 0)
    assert cr.sigma_outer(m) == m


def test_sigma_i_example():
    assert cr.sigma_i(1, Pattern(1, 0, 0, 0, 0, 0)) == Pattern(0, 0, 0, 0, 1, 0)
    m = Pattern(0, 0, 2, 1, 3, 1)
    if cr.wt(1, m) == 0:
        assert cr.sigma_i(1, m) == m


def test_khat_examples():
    assert cr.khat(Pattern(0, 0, 0, 0, 3, 2)) == GTArray(0, 0, 0, 3, 2)
    assert cr.khat(Pattern(1, 0, 0, 0, 0, 0)) == GTArray(1, 0, 0, 1, 0)
    assert cr.khat_inv(GTArray(1, 0, 0, 1, 0)) == Pattern(1, 0, 0, 0, 0, 0)


def test_khat_roundtrip_random():
    rng = random.Random(9)
    for _ in range(2000):
        m = random_pattern(rng)
        assert cr.khat_inv(cr.khat(m)) == m


def test_enumerate_component_order_and_sizes():
    assert cr.enumerate_component(1, 0) == [
        Pattern(0, 0, 0, 0, 1, 0),
        Pattern(0, 0, 0, 1, 0, 0),
        Pattern(1, 0, 0, 0, 0, 0),
    ]
    assert len(cr.enumerate_component(1, 1)) == 8
    assert len(cr.enumerate_component(0, 0)) == 1
    comp = cr.enumerate_component(2, 3)
    assert comp == sorted(comp, key=Pattern.entries)
    assert all(m.in_crystal and (m.l1, m.l2) == (2, 3) for m in comp)


def test_component_count_against_weyl_oracle():
    for l1 in range(9):
        for l2 in range(9 - l1):
            assert len(cr.enumerate_component(l1, l2)) == weyl_dimension(l1, l2)


def test_zero_weight_count():
    for l1 in range(9):
        for l2 in range(9 - l1):
            count = sum(
                1 for m in cr.enumerate_component(l1, l2) if cr.weight_pair(m) == (0, 0)
            )
            expected = min(l1, l2) + 1 if (l1 - l2) % 3 == 0 else 0
            assert count == expected, (l1, l2)


def test_operator_identities_random():
    rng = random.Random(11)
    for _ in range(2500):
        m = random_pattern(rng)
        r, s = rng.randint(-10, 10), rng.randint(-10, 10)
        i = rng.choice((1, 2))
        j = 3 - i
        assert cr.e_pow(i, r, cr.e_pow(i, s, m)) == cr.e_pow(i, r + s, m)
        assert cr.e_pow(1, r, cr.e_pow(2, r + s, cr.e_pow(1, s, m))) == cr.e_pow(
            2, s, cr.e_pow(1, r + s, cr.e_pow(2, r, m))
        )
        assert cr.sigma_i(i, cr.sigma_i(i, m)) == m
        assert cr.sigma_i(i, cr.e_pow(i, r, m)) == cr.e_pow(i, -r, cr.sigma_i(i, m))
        assert cr.sigma_outer(cr.e_pow(i, r, m)) == cr.e_pow(j, -r, cr.sigma_outer(m))
        assert cr.sigma_i(1, cr.sigma_i(2, cr.sigma_i(1, m))) == cr.sigma_i(
            2, cr.sigma_i(1, cr.sigma_i(2, m))
        )
        assert cr.sigma_i(i, cr.sigma_outer(m)) == cr.sigma_outer(cr.sigma_i(j, m))
        image = cr.e_pow(i, r, m)
        assert (image.l1, image.l2) == (m.l1, m.l2)
        assert cr.wt(i, cr.sigma_outer(m)) == -cr.wt(j, m)
        assert cr.wt(i, cr.sigma_i(i, m)) == -cr.wt(i, m)


def test_apply_ops_right_to_left():
    m = Pattern(1, 0, 0, 0, 0, 0)
    # rightmost token fires first
    assert cr.apply_ops(m, "sigma, e1^1") == cr.sigma_outer(cr.e_pow(1, 1, m))
    assert cr.apply_ops(m, "sigma1") == cr.sigma_i(1, m)
    with pytest.raises(ValueError):
        cr.apply_ops(m, "rotate")
