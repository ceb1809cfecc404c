import pytest

from rsemi.actions import (PartialAction, classify_action, same_action, underlying_action,
                           verify_partial_action)
from rsemi.errors import RejectedInputError
from rsemi.fixtures import (b2, c2, c2_lattice, cyclic_group, identity_action, idempotent_monoid, not_strong,
                            strong_not_pda, trivial_monoid, w_c2_identity)
from rsemi.free_models import build_free_model, ideal_interval
from rsemi.order import chain


@pytest.fixture(scope="module")
def free_a():
    return build_free_model("a", "monoid", 4, 3)


def test_identity_action_of_trivial_monoid():
    assert verify_partial_action(identity_action(trivial_monoid(), c2_lattice())).ok


def test_free_generator_action(free_a):
    rep = verify_partial_action(free_a.action)
    assert rep.ok
    assert rep.bound == "|word|<=3; |ideal|<=4"


def test_non_ideal_range_fails_a():
    # g maps the ideal {0,1} onto {0,2}, which is not an ideal of the 3-chain
    T, Y = cyclic_group(2), chain(3)
    table = {("1", y): y for y in Y.elements}
    table.update({("g", "0"): "0", ("g", "1"): "2"})
    rep = verify_partial_action(PartialAction.from_table(T, Y, table))
    assert "A" in rep.failed
    assert rep["A"].witness == ("g",)


def test_reverse():
    pa = identity_action(idempotent_monoid(), c2_lattice())
    rev = pa.reverse()
    assert rev.side == "right"
    assert all(rev.act(t, y) == y for t in rev.monoid.elements for y in rev.lattice.elements)
    for fixture in (strong_not_pda(), not_strong()):
        assert same_action(fixture.reverse().reverse(), fixture)


def test_reverse_of_free_model(free_a):
    rev = free_a.action.reverse()
    assert rev.act("a", ideal_interval(1, 0)) == ideal_interval(0, 1)


def test_total_action_flags():
    f = classify_action(identity_action(cyclic_group(3), chain(3)))
    assert f.isAction and f.isStrong and f.isPDA and f.domainsPrincipal


def test_free_model_is_pda_with_principal_domains(free_a):
    f = classify_action(free_a.action)
    assert f.isPDA and f.domainsPrincipal and not f.isAction


def test_strong_not_pda_fixture():
    f = classify_action(strong_not_pda())
    assert f.isStrong and not f.isPDA
    # gg = 1 acts on 1 while g does not
    assert f.witnesses["PDA"] == ("g", "g", "1")


def test_idempotent_monoid_partial_action_is_strong():
    T, Y = idempotent_monoid(), c2_lattice()
    table = {("1", "b"): "b", ("1", "1"): "1", ("t", "b"): "b"}
    f = classify_action(PartialAction.from_table(T, Y, table))
    # t·t = t, so the PDA condition reduces to the fixed point t·b = b and holds
    assert f.isStrong and f.isPDA


def test_not_strong_fixture():
    f = classify_action(not_strong())
    assert not f.isStrong
    assert f.witnesses["strong"] == ("g", "g", "x")


def test_underlying_action_of_c2():
    pa = underlying_action(c2())
    assert len(pa.monoid.elements) == 1
    assert all(pa.act(t, e) == e for t in pa.monoid.elements for e in pa.lattice.elements)


def test_underlying_action_of_w_product_is_identity():
    pa = underlying_action(w_c2_identity())
    assert len(pa.monoid.elements) == 2
    assert classify_action(pa).isAction
    assert all(pa.act(t, e) == e for t in pa.monoid.elements for e in pa.lattice.elements)


def test_underlying_action_of_free_model(free_a):
    pa = underlying_action(free_a.algebra)
    assert same_action(pa, free_a.action)


def test_underlying_action_rejects_non_proper():
    with pytest.raises(RejectedInputError):
        underlying_action(b2())
