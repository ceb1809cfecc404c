from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from rsemi.actions import classify_action, verify_partial_action
from rsemi.algebra import verify_restriction_axioms
from rsemi.errors import InsufficientBoundError, MalformedInputError
from rsemi.free_models import (ONE, build_free_model, enumerate_prefix_ideals, from_interval, hull, ideal_interval,
                               in_szendrei_model, inverse, is_prefix_ideal, is_reduced, red_product, reduce,
                               star_action, szendrei_mul, szendrei_plus, szendrei_star, to_interval)

I = ideal_interval
words = st.text(alphabet="aAbB", max_size=8)


def test_reduce_examples():
    assert reduce("aA") == ""
    assert red_product("aB", "ba") == "aa"
    assert red_product("ab", "") == "ab"
    with pytest.raises(MalformedInputError):
        reduce("a1")


@given(words)
def test_reduce_is_idempotent_and_reduced(u):
    r = reduce(u)
    assert is_reduced(r) and reduce(r) == r
    assert red_product(r, inverse(r)) == ""


@given(words, words, words)
def test_reduced_product_is_associative(u, v, w):
    assert red_product(red_product(u, v), w) == red_product(u, red_product(v, w))


def test_star_action_examples():
    assert star_action("a", ONE) == {"a"}
    assert star_action("a", {"", "A"}) == {"a", ""}


@given(st.integers(0, 5), st.integers(0, 4), st.integers(0, 4))
def test_power_translates_intervals(k, m, n):
    assert star_action("a" * k, I(m, n)) == from_interval(k - n, k + m)
    assert to_interval(I(m, n)) == (-n, m)


def test_enumerate_prefix_ideals_small():
    ideals = enumerate_prefix_ideals("a", 2)
    assert len(ideals) == 3 and set(ideals) == {ONE, frozenset({"", "a"}), frozenset({"", "A"})}
    assert is_prefix_ideal({"", "a", "A"})
    assert not is_prefix_ideal({"a"})


def _brute_prefix_ideals(alphabet, size):
    signed = list(alphabet) + [a.upper() for a in alphabet]
    ws = sorted({reduce("".join(p)) for n in range(size) for p in product(signed, repeat=n)})
    ws = [w for w in ws if len(w) < size]
    out = set()
    for n in range(1, size + 1):
        for sub in combinations(ws, n):
            if is_prefix_ideal(set(sub)):
                out.add(frozenset(sub))
    return out


@pytest.mark.parametrize("alphabet,size", [("a", 4), ("ab", 3)])
def test_enumeration_against_subset_oracle(alphabet, size):
    assert set(enumerate_prefix_ideals(alphabet, size)) == _brute_prefix_ideals(alphabet, size)


def test_meet_of_ideals_is_union():
    fm = build_free_model("a", "monoid", 3, 2)
    assert fm.lattice.meet(frozenset({"", "a"}), frozenset({"", "A"})) == {"", "a", "A"}
    assert fm.lattice.top == ONE


def test_domain_of_generator():
    fm = build_free_model("a", "monoid", 4, 3)
    assert fm.action.domain_top("a") == I(0, 1)
    assert fm.action.domain_top("aa") == I(0, 2)


def test_free_model_algebra():
    fm = build_free_model("a", "monoid", 4, 3)
    S = fm.algebra
    assert verify_restriction_axioms(S).ok
    assert S.mul((I(1, 0), "a"), (I(0, 1), "a")) == (I(1, 0), "aa")
    assert S.identity == (ONE, "")


def test_semigroup_mode():
    fm = build_free_model("a", "semigroup", 4, 3)
    assert ONE not in fm.lattice.elements
    f = classify_action(fm.action)
    assert f.isPDA and f.domainsPrincipalExceptIdentity and not f.domainsPrincipal
    assert verify_partial_action(fm.action).ok
    assert verify_restriction_axioms(fm.algebra).ok


def test_bounds_are_checked():
    with pytest.raises(InsufficientBoundError):
        build_free_model("a", "monoid", 3, 3)
    with pytest.raises(MalformedInputError):
        build_free_model("abc")


def test_szendrei_interval_product():
    x = (frozenset({"a"}), "a")
    assert szendrei_mul(x, x) == (from_interval(1, 2), "aa")


def test_szendrei_unary_operations():
    x = (I(1, 0), "a")
    assert szendrei_star(x) == (I(0, 1), "")
    assert szendrei_plus(x) == (I(1, 0), "")
    assert in_szendrei_model(x)
    assert not in_szendrei_model((I(0, 1), "a"))


@given(st.integers(-3, 3), st.integers(0, 3), st.integers(-3, 3), st.integers(0, 3))
def test_hull_of_intervals(p1, n1, p2, n2):
    # in the one-letter tree the hull of two intervals is the interval spanning both
    A, B = from_interval(p1, p1 + n1), from_interval(p2, p2 + n2)
    assert hull(A, B) == from_interval(min(p1, p2), max(p1 + n1, p2 + n2))
