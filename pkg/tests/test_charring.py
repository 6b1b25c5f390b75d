"""Character-ring arithmetic, denominators, and the exact torus pairing.

The denominator expansions are cross-checked against an independent
subset-sum oracle (itertools over the factors), not the ring's own
multiplication.
"""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from ellhom import (
    CharElement,
    ch_conjugate,
    ch_mul,
    divide_exact,
    enumerate_weyl_group,
    half_denominator,
    torus_integral,
    torus_pairing,
    weyl_act,
    weyl_denominator_full,
)


def oracle_product_expansion(roots):
    """Expand prod (1 - e^alpha) by iterating over all factor choices."""
    rank = len(roots[0])
    terms = {}
    for choice in product([0, 1], repeat=len(roots)):
        exponent = tuple(
            sum(c * a[i] for c, a in zip(choice, roots)) for i in range(rank)
        )
        coeff = (-1) ** sum(choice)
        terms[exponent] = terms.get(exponent, 0) + coeff
    return {mu: c for mu, c in terms.items() if c}


def weights(rank, size=4):
    return st.tuples(*[st.integers(-size, size)] * rank)


def char_elements(rank):
    return st.dictionaries(weights(rank), st.integers(-9, 9), max_size=6).map(
        lambda d: CharElement(rank, d)
    )


def test_monomial_products(a1, a2):
    mu = CharElement.monomial((3,))
    assert ch_mul(mu, CharElement.one(1)) == mu
    omega = CharElement.monomial((1,)) + CharElement.monomial((-1,))
    square = omega * omega
    assert square == CharElement(1, {(2,): 1, (0,): 2, (-2,): 1})
    e1 = CharElement.monomial(a2.simple_root(0))
    e2 = CharElement.monomial(a2.simple_root(1))
    assert e1 * e2 == CharElement.monomial((1, 1))


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError, match="rank mismatch"):
        ch_mul(CharElement.one(1), CharElement.one(2))
    with pytest.raises(ValueError, match="rank"):
        CharElement(2, {(1,): 1})


def test_conjugation_examples(a1):
    assert ch_conjugate(CharElement.one(1)) == CharElement.one(1)
    x = CharElement(2, {(1, 0): 2, (0, 1): -1})
    assert ch_conjugate(x) == CharElement(2, {(-1, 0): 2, (0, -1): -1})
    d = weyl_denominator_full(a1)
    assert ch_conjugate(d) == d


def test_weyl_act_examples(a1, a2):
    one_minus = CharElement(1, {(0,): 1, (2,): -1})
    s = a1.simple_reflection(0)
    assert weyl_act(s, one_minus) == CharElement(1, {(0,): 1, (-2,): -1})
    orbit_sum = CharElement(2, {(1, 0): 1, (-1, 1): 1, (0, -1): 1})
    longest = a2.from_word([0, 1, 0])
    assert weyl_act(longest, orbit_sum) == orbit_sum
    with pytest.raises(ValueError, match="rank mismatch"):
        weyl_act(s, orbit_sum)


def test_torus_integral_examples(a1):
    assert torus_integral(CharElement.one(1)) == 1
    assert torus_integral(CharElement.monomial((3,))) == 0
    d = weyl_denominator_full(a1)
    assert d == CharElement(1, {(0,): 2, (2,): -1, (-2,): -1})
    assert torus_integral(d) == 2


def test_torus_pairing_examples():
    mu = CharElement.monomial((2, 1))
    nu = CharElement.monomial((1, 2))
    assert torus_pairing(mu, mu) == 1
    assert torus_pairing(mu, nu) == 0
    one_minus = CharElement(1, {(0,): 1, (2,): -1})
    assert torus_pairing(one_minus, one_minus) == 2


@pytest.mark.parametrize("token,order", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("C3", 48)])
def test_full_denominator_constant_term(token, order):
    from ellhom import parse_type

    rs = parse_type(token)
    d = weyl_denominator_full(rs)
    assert torus_integral(d) == order
    if len(rs.full_roots) <= 12:
        assert d.terms == oracle_product_expansion(rs.full_roots)


def test_half_denominator(a1, a2, b2):
    assert half_denominator(a1) == CharElement(1, {(0,): 1, (2,): -1})
    expected_a2 = oracle_product_expansion(a2.positive_roots)
    half = half_denominator(a2)
    assert half.terms == expected_a2
    assert len(half.terms) == 6
    assert half.constant_term() == 1
    assert half.coefficient((2, 2)) == -1
    for rs in (a1, a2, b2):
        h = half_denominator(rs)
        assert weyl_denominator_full(rs) == h * h.conjugate()


def test_denominator_is_weyl_and_conjugation_invariant(a2, b2):
    for rs in (a2, b2):
        d = weyl_denominator_full(rs)
        assert ch_conjugate(d) == d
        for w in enumerate_weyl_group(rs):
            assert weyl_act(w, d) == d


@given(a=char_elements(2), b=char_elements(2), c=char_elements(2))
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + CharElement.zero(2) == a
    assert a * CharElement.one(2) == a
    assert a - a == CharElement.zero(2)


@given(a=char_elements(2), b=char_elements(2))
@settings(max_examples=60, deadline=None)
def test_conjugation_is_a_ring_involution(a, b):
    assert ch_conjugate(ch_conjugate(a)) == a
    assert ch_conjugate(a * b) == ch_conjugate(a) * ch_conjugate(b)


@given(a=char_elements(2), b=char_elements(2), mu=weights(2))
@settings(max_examples=60, deadline=None)
def test_pairing_shift_invariance(a, b, mu):
    assert torus_pairing(a.shift(mu), b.shift(mu)) == torus_pairing(a, b)


@given(a=char_elements(2), b=char_elements(2), idx=st.integers(0, 5))
@settings(max_examples=60, deadline=None)
def test_pairing_weyl_invariance(a, b, idx):
    from ellhom import build_root_system

    rs = build_root_system("B", 2)
    w = list(enumerate_weyl_group(rs))[idx % 8]
    assert torus_pairing(weyl_act(w, a), weyl_act(w, b)) == torus_pairing(a, b)
    winv = rs.inverse(w)
    assert weyl_act(w, weyl_act(winv, a)) == a


@given(a=char_elements(2))
@settings(max_examples=40, deadline=None)
def test_pairing_against_definition(a):
    # the dot-product shortcut equals CT(a * conj(a))
    assert torus_pairing(a, a) == torus_integral(a * ch_conjugate(a))


def test_json_round_trip_with_big_coefficients():
    big = 10**40
    x = CharElement(2, {(1, -2): big, (-3, 4): -big - 7})
    data = x.to_dict()
    assert data["terms"][0]["c"] in (str(big), str(-big - 7))
    assert all(isinstance(t["c"], str) for t in data["terms"])
    assert CharElement.from_dict(data) == x
    assert data["terms"] == sorted(data["terms"], key=lambda t: t["w"])


def test_exact_division(a2):
    half = half_denominator(a2)
    x = CharElement(2, {(1, 0): 3, (-2, 1): -5, (0, 0): 1})
    assert divide_exact(half * x, half, a2) == x
    with pytest.raises(ValueError, match="not exact"):
        divide_exact(CharElement.monomial((1, 0)), half, a2)


@given(x=char_elements(2))
@settings(max_examples=40, deadline=None)
def test_exact_division_round_trips(x):
    from ellhom import build_root_system

    rs = build_root_system("A", 2)
    for q in (half_denominator(rs), half_denominator(rs).conjugate()):
        assert divide_exact(q * x, q, rs) == x
