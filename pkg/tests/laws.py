"""Property laws shared by the unit tests and acceptance criterion 11.

Each law counts its own invocations in CALLS so callers can confirm that
hypothesis really drew the required number of cases.
"""

from collections import Counter
from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from signed_mahonian.perm_core import Perm, append_digit, inv, last, maj
from signed_mahonian.qpoly import (
    CycloElem, CycloPoly, IntPoly, TriPoly, cyclotomic, exact_div_tri,
    reduce_mod_cyclotomic,
)

CASES = 1000
CALLS = Counter()

coef = st.integers(-30, 30)
int_polys = st.lists(coef, max_size=8).map(IntPoly)
tri_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.integers(-6, 6), max_size=5,
).map(TriPoly)


def phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@st.composite
def cyclo_triples(draw):
    m = draw(st.integers(1, 12))
    elem = st.lists(coef, min_size=phi(m), max_size=phi(m)).map(
        lambda c: CycloElem(m, tuple(c)))
    return draw(elem), draw(elem), draw(elem)


@st.composite
def cyclo_poly_triples(draw):
    m = draw(st.integers(1, 8))
    elem = st.lists(st.integers(-5, 5), min_size=phi(m), max_size=phi(m)).map(
        lambda c: CycloElem(m, tuple(c)))
    poly = st.lists(elem, max_size=4).map(lambda cs: CycloPoly(m, tuple(cs)))
    return draw(poly), draw(poly), draw(poly)


def _triples(s):
    return st.tuples(s, s, s)


STRATEGIES = {
    "IntPoly": _triples(int_polys),
    "TriPoly": _triples(tri_polys),
    "CycloElem": cyclo_triples(),
    "CycloPoly": cyclo_poly_triples(),
}


def _make_ring_laws(name, strategy):
    @settings(max_examples=CASES)
    @given(strategy)
    def associativity(t):
        CALLS[f"{name} associativity"] += 1
        a, b, c = t
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=CASES)
    @given(strategy)
    def commutativity(t):
        CALLS[f"{name} commutativity"] += 1
        a, b, _ = t
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=CASES)
    @given(strategy)
    def distributivity(t):
        CALLS[f"{name} distributivity"] += 1
        a, b, c = t
        assert a * (b + c) == a * b + a * c
        assert a - a == a * 0

    return {
        f"{name} associativity": associativity,
        f"{name} commutativity": commutativity,
        f"{name} distributivity": distributivity,
    }


@settings(max_examples=CASES)
@given(st.lists(coef, max_size=21).map(IntPoly),
       st.lists(coef, max_size=21).map(IntPoly), st.integers(1, 12))
def reduction_homomorphism(p, r, m):
    CALLS["cyclotomic reduction homomorphism"] += 1
    assert reduce_mod_cyclotomic(p + r, m) == reduce_mod_cyclotomic(p, m) + reduce_mod_cyclotomic(r, m)
    assert reduce_mod_cyclotomic(p * r, m) == reduce_mod_cyclotomic(p, m) * reduce_mod_cyclotomic(r, m)
    assert reduce_mod_cyclotomic(cyclotomic(m), m).is_zero()


def phi_product_identity():
    """prod_{d | m} Phi_d = q^m - 1, exhaustively for m <= 30."""
    for m in range(1, 31):
        CALLS["cyclotomic product identity"] += 1
        prod = IntPoly.const(1)
        for d in range(1, m + 1):
            if m % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly.monomial(m) - 1


X_MINUS_Z = TriPoly({(1, 0, 0): 1, (0, 0, 1): -1})


@settings(max_examples=CASES)
@given(tri_polys)
def exact_division_roundtrip(p):
    CALLS["exact division round-trip"] += 1
    assert exact_div_tri(X_MINUS_Z * p) == p


@st.composite
def perm_and_digit(draw):
    n = draw(st.integers(2, 8))
    p = Perm(tuple(draw(st.permutations(range(1, n)))))
    k = draw(st.integers(1, n))
    return p, k


@settings(max_examples=CASES)
@given(perm_and_digit())
def append_digit_updates(pk):
    CALLS["append_digit statistic updates"] += 1
    p, k = pk
    n = p.n + 1
    q = append_digit(p, k)
    assert inv(q) == inv(p) + (n - k)
    assert maj(q) == (maj(p) if k > p.window[-1] else maj(p) + (n - 1))
    assert last(q) == k - 1


@settings(max_examples=CASES)
@given(perm_and_digit())
def append_digit_invertible(pk):
    """(p, k) is recovered from append_digit(p, k), so the map is injective."""
    CALLS["append_digit bijectivity"] += 1
    p, k = pk
    w = append_digit(p, k).window
    assert w[-1] == k
    assert tuple(v if v < k else v - 1 for v in w[:-1]) == p.window


LAWS = {}
for _name, _strategy in STRATEGIES.items():
    LAWS.update(_make_ring_laws(_name, _strategy))
LAWS.update({
    "cyclotomic reduction homomorphism": reduction_homomorphism,
    "exact division round-trip": exact_division_roundtrip,
    "append_digit statistic updates": append_digit_updates,
    "append_digit bijectivity": append_digit_invertible,
})
