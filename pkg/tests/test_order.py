import pytest

from rsemi.errors import NotASemilatticeError
from rsemi.free_models import build_free_model, ideal_interval
from rsemi.order import (build_semilattice, chain, check_order_iso, is_order_ideal, munn_monoid, order_ideals,
                         principal_ideal)


def test_chain_meet_is_min():
    Y = chain(3)
    for x in Y.elements:
        for y in Y.elements:
            assert Y.meet(x, y) == min(x, y)
    assert Y.top == "2" and Y.bottom == "0"


def test_meet_table_input_matches_order_input():
    Y = chain(3)
    Z = build_semilattice(Y.elements, meet={(x, y): min(x, y) for x in Y.elements for y in Y.elements})
    assert all(Z.leq(x, y) == Y.leq(x, y) for x in Y.elements for y in Y.elements)


def test_atoms_without_meet_rejected_with_pair():
    # a, b, c below 1 and pairwise incomparable: no bottom, so a and b have no meet
    with pytest.raises(NotASemilatticeError) as exc:
        build_semilattice(["a", "b", "c", "1"], leq=[("a", "1"), ("b", "1"), ("c", "1")])
    assert exc.value.pair == ("a", "b")


def test_powerset_meet_is_intersection():
    sets = [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")]
    Y = build_semilattice(sets, leq=[(x, y) for x in sets for y in sets if x <= y])
    assert all(Y.meet(x, y) == x & y for x in sets for y in sets)


def test_bad_meet_table():
    with pytest.raises(NotASemilatticeError):
        build_semilattice(["x", "y"], meet={("x", "x"): "x", ("x", "y"): "x", ("y", "x"): "y", ("y", "y"): "y"})


def test_order_ideals_of_c2():
    Y = build_semilattice(["b", "1"], leq=[("b", "1")])
    assert is_order_ideal({"b"}, Y)
    assert not is_order_ideal({"1"}, Y)
    assert principal_ideal(chain(3), "1").elements == {"0", "1"}
    assert sorted(len(I) for I in order_ideals(Y)) == [1, 2]


@pytest.mark.parametrize("n,size", [(1, 1), (2, 2), (3, 3)])
def test_munn_monoid_of_chains(n, size):
    # a chain has only identity isomorphisms between its principal ideals
    T = munn_monoid(chain(n))
    assert len(T.elements) == size
    assert T.identity is not None and len(T.identity.graph) == n


def test_munn_monoid_of_v_shape():
    Y = build_semilattice(["0", "x", "y"], leq=[("0", "x"), ("0", "y")])
    T = munn_monoid(Y)
    # identities on 0, x, y downsets plus the two isomorphisms between x-down and y-down
    assert len(T.elements) == 5
    assert T.identity is None


def test_check_order_iso():
    Y = chain(3)
    I = principal_ideal(Y, "1").elements
    assert check_order_iso({x: x for x in I}, I, I, Y)
    assert not check_order_iso({"0": "0", "1": "0"}, I, I, Y)


def test_generator_map_of_free_model_is_order_iso():
    fm = build_free_model("a", "monoid", 4, 3)
    pa, Y = fm.action, fm.lattice
    dom = pa.domain("a")
    ran = pa.range("a")
    assert ideal_interval(0, 1) == pa.domain_top("a")
    assert check_order_iso({y: pa.act("a", y) for y in dom}, dom, ran, Y)
