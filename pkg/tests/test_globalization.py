import pytest

from rsemi._util import GlobalPair as G
from rsemi.errors import RejectedInputError
from rsemi.fixtures import c2_lattice, identity_action, idempotent_monoid, not_strong, strong_not_pda, trivial_monoid
from rsemi.free_models import build_free_model, free_action, ideal_interval, ideal_semilattice
from rsemi.globalization import (build_global_poset_generic, build_w_of_global, canonical_form, canonical_sample,
                                 embed_mty, global_action, global_action_inverse, global_leq, global_meet)
from rsemi.monoids import FreeMonoid
from rsemi.order import chain

I = ideal_interval


@pytest.fixture(scope="module")
def free_a():
    return build_free_model("a", "monoid", 4, 3)


@pytest.fixture(scope="module")
def w_a():
    fm = build_free_model("a", "monoid", 4, 2)
    return fm, build_w_of_global(fm.action)


# -- generic mode


def test_trivial_monoid_gives_y():
    Y = chain(3)
    gp = build_global_poset_generic(identity_action(trivial_monoid(), Y))
    assert gp.report.ok
    assert all(len(C) == 1 for C in gp.classes) and len(gp.points) == 3
    assert all(gp.leq(gp.embedded(x), gp.embedded(y)) == Y.leq(x, y) for x in Y.elements for y in Y.elements)


def test_identity_action_collapses_words():
    gp = build_global_poset_generic(identity_action(idempotent_monoid(), c2_lattice()))
    assert gp.report.ok
    assert len(gp.points) == 2
    assert all(gp.point(y, "t") == gp.point(y, "1") for y in ("b", "1"))


def test_strong_non_pda_fixture_satisfies_class_statements():
    gp = build_global_poset_generic(strong_not_pda())
    assert gp.report.ok
    assert gp.report["classes:action-value"].passed


def test_non_strong_rejected():
    with pytest.raises(RejectedInputError) as exc:
        build_global_poset_generic(not_strong())
    assert exc.value.witness == ("g", "g", "x")


# -- canonical mode over {a}


def test_canonical_form(free_a):
    pa = free_a.action
    assert canonical_form((I(0, 0), ""), pa) == (I(0, 0), "")
    assert canonical_form((I(0, 1), "a"), pa) == (I(1, 0), "")
    assert canonical_form((I(0, 0), "a"), pa) == (I(0, 0), "a")


def test_global_meet(free_a):
    pa = free_a.action
    c = G(I(0, 0), "a")
    assert global_meet(c, c, pa) == c
    assert global_meet(G(I(0, 0), "a"), G(I(0, 0), ""), pa) == (I(1, 0), "")
    assert global_meet(G(I(0, 0), "aa"), G(I(0, 0), "a"), pa) == (I(1, 0), "a")


def test_global_action(free_a):
    pa = free_a.action
    c = G(I(0, 0), "a")
    assert global_action("", c, pa) == c
    assert global_action("a", G(I(0, 1), ""), pa) == (I(1, 0), "")
    assert global_action("a", G(I(0, 0), ""), pa) == (I(0, 0), "a")
    assert global_action_inverse("a", G(I(0, 0), "a"), pa) == (I(0, 0), "")
    assert global_action_inverse("a", G(I(1, 0), ""), pa) == (I(0, 1), "")
    assert global_action_inverse("a", G(I(0, 0), ""), pa) is None


def test_order_is_compatible_with_meet(free_a):
    pa = free_a.action
    X = canonical_sample(pa)
    for c in X[:12]:
        for d in X:
            m = global_meet(c, d, pa)
            assert global_leq(m, c, pa) and global_leq(m, d, pa)


def test_w_of_global_report(w_a):
    _fm, W = w_a
    assert W.report.ok
    assert W.identity is None


def test_bound_one_is_a_restriction_of_bound_two(w_a):
    fm2, W2 = w_a
    fm1 = build_free_model("a", "monoid", 4, 1)
    W1 = build_w_of_global(fm1.action)
    assert set(W1.elements) <= set(W2.elements)
    inside = set(W1.elements)
    for x in W1.elements:
        assert W1.star(x) == W2.star(x) and W1.plus(x) == W2.plus(x)
        for y in W1.elements:
            p = W1.mul(x, y)
            assert p == W2.mul(x, y)
            if p in inside:
                assert p in W1


def test_single_ideal_gives_singleton_classes():
    T = FreeMonoid("a", 2)
    Y = ideal_semilattice(T.alphabet, 1)
    pa = free_action(T, Y)
    X = canonical_sample(pa)
    assert X == [(I(0, 0), ""), (I(0, 0), "a"), (I(0, 0), "aa")]
    # a^k * {1} are pairwise incomparable singletons
    assert not any(global_leq(c, d, pa) for c in X for d in X if c != d)


def test_embed_mty_examples(w_a):
    fm, W = w_a
    pa = fm.action
    mw = embed_mty(pa, W)
    assert mw.is_morphism and mw.injective
    f = mw.map
    M = fm.algebra
    assert f[I(0, 0), ""] == (G(I(0, 0), ""), "")
    x = (I(1, 0), "a")
    assert f[x] == (G(I(1, 0), ""), "a")
    assert M.mul(x, x) == (I(2, 0), "aa")
    assert f[M.mul(x, x)] == W.mul(f[x], f[x])
    assert f[M.star(x)] == (G(I(0, 1), ""), "") == W.star(f[x])


def test_canonical_mode_requires_pda():
    T = FreeMonoid("a", 2)
    Y = c2_lattice()
    from rsemi.actions import PartialAction

    pa = PartialAction.from_table(T, Y, {("", "b"): "b", ("", "1"): "1", ("a", "b"): "b"})
    with pytest.raises(RejectedInputError):
        build_w_of_global(pa)
