import warnings

import pytest

from rsemi.algebra import (check_morphism, classify, natural_order, projections, sigma_congruence,
                           verify_restriction_axioms)
from rsemi.covers import adjoin_identity
from rsemi.errors import MalformedInputError
from rsemi.fixtures import b2, c2, c2_times_z3, chain3, reduced_monoid, semilattice_algebra, w_c2_identity
from rsemi.order import chain


def test_projections():
    assert projections(c2()).elements == {"b", "1"}
    assert projections(b2()).elements == {"0", "e", "f"}
    assert projections(reduced_monoid()).elements == {"1"}


def test_natural_order():
    assert natural_order(c2()) == {("b", "b"), ("1", "1"), ("b", "1")}
    order = natural_order(b2())
    assert ("0", "a") in order and ("a", "e") not in order
    R = reduced_monoid()
    assert natural_order(R) == {(x, x) for x in R.elements}


def test_sigma():
    assert len(sigma_congruence(c2()).classes) == 1
    assert len(sigma_congruence(b2()).classes) == 1
    W = w_c2_identity()
    sigma = sigma_congruence(W)
    assert len(sigma.classes) == 2
    # classes are indexed by the monoid coordinate
    assert all(sigma.related(a, b) == (a[1] == b[1]) for a in W.elements for b in W.elements)


def test_classify_c2():
    f = classify(c2())
    assert f.isProper and f.isAmple and f.isFRestriction and f.isUltraProper and f.sigmaIsPerfect


def test_classify_b2_not_proper_with_valid_witness():
    S = b2()
    f = classify(S)
    assert not f.isProper
    a, b = f.witnesses["proper"]
    sigma = sigma_congruence(S)
    assert a != b and sigma.related(a, b)
    assert S.star(a) == S.star(b) or S.plus(a) == S.plus(b)


def test_classify_w_product():
    f = classify(w_c2_identity())
    assert f.isProper and f.isUltraProper and f.isExtraProper


def test_six_element_fixture_is_proper_ample():
    S = c2_times_z3()
    assert len(S) == 6
    f = classify(S)
    assert f.isProper and f.isAmple and f.isFAMonoid


def test_check_morphism():
    S = c2()
    mw = check_morphism({x: x for x in S.elements}, S, S)
    assert mw.is_isomorphism and mw.isCover
    const = check_morphism({x: "1" for x in S.elements}, S, S)
    assert const.preservesMul and not const.projectionSeparating and not const.injective


def test_axiom_failure_names_witness():
    S = c2()
    bad = type(S)(S.elements, S.table, {"b": "1", "1": "b"}, S.plus_map, S.identity)
    rep = verify_restriction_axioms(bad)
    assert "xx*=x" in rep.failed
    assert rep["xx*=x"].witness == ("1",)


def test_out_of_range_table_rejected():
    S = c2()
    with pytest.raises(MalformedInputError):
        type(S)(S.elements, {**S.table, ("b", "b"): "z"}, S.star_map, S.plus_map, S.identity)


def test_adjoin_identity():
    bottom = semilattice_algebra(chain(1))
    bottom.identity = None
    S1 = adjoin_identity(bottom)
    assert len(S1) == 2 and verify_restriction_axioms(S1).ok
    B1 = adjoin_identity(b2())
    assert len(B1) == 6 and verify_restriction_axioms(B1).ok
    with pytest.warns(UserWarning):
        B11 = adjoin_identity(B1)
    assert len(B11) == 7


def test_chain3_and_reduced_are_restriction():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for S in (chain3(), reduced_monoid()):
            assert verify_restriction_axioms(S).ok
