import pytest

from qcactus import coxeter as cx

TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "G2", "A1xA1", "A1xA2")

ORDERS = {
    "A1": 2,
    "A2": 6,
    "A3": 24,
    "A4": 120,
    "B2": 8,
    "B3": 48,
    "G2": 12,
    "A1xA1": 4,
    "A1xA2": 12,
}


def subsets(indices):
    items = list(indices)
    for mask in range(1 << len(items)):
        yield frozenset(items[k] for k in range(len(items)) if mask >> k & 1)


@pytest.fixture(scope="module")
def data():
    return {name: cx.CoxeterDatum.from_type(name) for name in TYPES}


def test_group_orders(data):
    for name, d in data.items():
        assert len(d.elements()) == ORDERS[name], name


def test_from_word(data):
    a2 = data["A2"]
    assert cx.from_word(a2, ()).is_identity()
    assert cx.from_word(a2, (1, 1)).is_identity()
    assert cx.from_word(a2, (1, 2, 1)) == cx.from_word(a2, (2, 1, 2))
    with pytest.raises(ValueError):
        cx.from_word(a2, (3,))


def test_length(data):
    for name, d in data.items():
        assert cx.length(d.identity) == 0
        for i in d.indices:
            assert cx.length(d.generators[i]) == 1
    w0 = cx.longest_element(data["A2"], (1, 2))
    assert cx.length(w0) == 3


def test_reduced_word_deterministic(data):
    assert cx.reduced_word(data["A2"].identity) == ()
    assert cx.reduced_word(cx.longest_element(data["A2"], (1, 2))) == (1, 2, 1)
    assert cx.reduced_word(cx.longest_element(data["A1xA1"], (1, 2))) == (1, 2)


def test_reduced_word_roundtrip(data):
    for name, d in data.items():
        if len(d.elements()) > 48:
            continue
        for w in d.elements():
            word = cx.reduced_word(w)
            assert len(word) == cx.length(w)
            assert cx.from_word(d, word) == w


def test_longest_element(data):
    for name, d in data.items():
        assert cx.longest_element(d, ()) == d.identity
        for i in d.indices:
            assert cx.longest_element(d, (i,)) == d.generators[i]
        w0 = cx.longest_element(d, d.indices)
        assert (w0 * w0).is_identity()
        for i in d.indices:
            assert cx.length(d.generators[i] * w0) < cx.length(w0)
    a2 = data["A2"]
    assert cx.longest_element(a2, (1, 2)) == cx.from_word(a2, (1, 2, 1))


def test_star_involution(data):
    assert cx.star_involution(data["A2"], (1, 2), 1) == 2
    assert cx.star_involution(data["B2"], (1, 2), 1) == 1
    for name, d in data.items():
        for J in subsets(d.indices):
            for j in J:
                js = cx.star_involution(d, J, j)
                assert cx.star_involution(d, J, js) == j
            for j in J:
                for k in J:
                    js = cx.star_involution(d, J, j)
                    ks = cx.star_involution(d, J, k)
                    assert d.m[js - 1][ks - 1] == d.m[j - 1][k - 1]
    with pytest.raises(ValueError):
        cx.star_involution(data["A2"], (1,), 2)


def test_star_singleton(data):
    for name, d in data.items():
        for i in d.indices:
            assert cx.star_involution(d, (i,), i) == i


def test_topology(data):
    a2, prod = data["A2"], data["A1xA1"]
    assert cx.topology(a2, {1}) == ({1, 2}, {2}, frozenset())
    assert cx.topology(prod, {1}) == ({1}, frozenset(), {2})
    assert cx.topology(a2, set()) == (frozenset(), frozenset(), {1, 2})


def test_kernel_examples(data):
    assert len(cx.kernel_parabolic(data["A2"], {1}, "formula")) == 1
    assert len(cx.kernel_parabolic(data["A1xA1"], {1}, "bruteforce")) == 2
    d = data["A2"]
    assert cx.kernel_parabolic(d, {1, 2}, "formula") == frozenset(d.elements())
    assert cx.kernel_parabolic(data["A3"], set(), "bruteforce") == frozenset(
        [data["A3"].identity]
    )


def test_kernel_agreement_exhaustive(data):
    for name, d in data.items():
        for J in subsets(d.indices):
            formula = cx.kernel_parabolic(d, J, "formula")
            brute = cx.kernel_parabolic(d, J, "bruteforce")
            assert formula == brute, (name, sorted(J))


def test_parabolic_intersections(data):
    for name, d in data.items():
        groups = {J: frozenset(d.subgroup_elements(J)) for J in subsets(d.indices)}
        for J in groups:
            for K in groups:
                assert groups[J] & groups[K] == groups[J & K], (name, sorted(J), sorted(K))


def test_closed_factorization(data):
    for name, d in data.items():
        for J in subsets(d.indices):
            closure, _, perp = cx.topology(d, J)
            if closure != J:
                continue
            products = {}
            for u in d.subgroup_elements(J):
                for u2 in d.subgroup_elements(perp):
                    key = (u * u2).matrix
                    assert key not in products, (name, sorted(J))
                    products[key] = True
            assert len(products) == len(d.elements()), (name, sorted(J))


def test_infinite_type_rejected():
    # the rank-2 matrix with product of off-diagonals 4 generates an infinite group
    with pytest.raises(ValueError):
        cx.CoxeterDatum([[2, -2], [-2, 2]], cap=500)


def test_unknown_type():
    with pytest.raises(ValueError):
        cx.CoxeterDatum.from_type("E8")


def test_parse_subset():
    assert cx.parse_subset("") == frozenset()
    assert cx.parse_subset("1,3") == frozenset({1, 3})
