"""M(T,Y), W-products, double actions and Y *_m T.

Elements of all product constructions are pairs ``(y, t)``.  When both the
monoid and the semilattice are finite the result is a
:class:`~rsemi.algebra.FiniteRestrictionAlgebra`; otherwise a
:class:`~rsemi.algebra.BoundedRestrictionAlgebra` over the sampled pairs.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._util import counterexample, fmt
from .actions import PartialAction, classify_action, underlying_action, verify_partial_action
from .algebra import (BoundedRestrictionAlgebra, FiniteRestrictionAlgebra, check_morphism,
                      same_algebra, sigma_congruence, proper_witness)
from .errors import RejectedInputError, VerificationError
from .report import Report


def _algebra(pa, elements, mul, star, plus, identity, provenance, contains):
    if pa.closed:
        alg = FiniteRestrictionAlgebra.from_operations(elements, mul, star, plus, identity, provenance)
    else:
        alg = BoundedRestrictionAlgebra(elements, mul, star, plus, identity, pa.bound, provenance, contains)
    alg.action = pa
    return alg


def m_product(pa, check=True):
    """M(T,Y) = {(y,t) : y∘t defined} with (x,s)(y,t) = (s·((x∘s)∧y), st).

    (y,t)* = (y∘t, 1) and (y,t)+ = (y, 1); the identity is (top, 1) when Y has
    a top.  With ``check`` the partial action axioms are verified first.
    """
    if pa.side != "left":
        raise RejectedInputError("m_product expects a left partial action")
    if check:
        rep = verify_partial_action(pa)
        if not rep.ok:
            raise RejectedInputError(f"partial action fails {rep.failed[0]}", rep[rep.failed[0]].witness)
    T, Y = pa.monoid, pa.lattice
    one = T.identity
    elements = [(y, t) for t in T.elements for y in Y.elements if pa.act_inv(t, y) is not None]

    def mul(a, b):
        (x, s), (y, t) = a, b
        return (pa.act(s, Y.meet(pa.act_inv(s, x), y)), T.mul(s, t))

    def contains(a):
        return (isinstance(a, tuple) and len(a) == 2 and T.contains(a[1])
                and pa.act_inv(a[1], a[0]) is not None)

    identity = (Y.top, one) if Y.top is not None else None
    return _algebra(pa, elements, mul, lambda a: (pa.act_inv(a[1], a[0]), one), lambda a: (a[0], one),
                    identity, {"construction": "M(T,Y)"}, contains)


def w_product(pa, check=True):
    """W(T,Y) for a total left action by order-embeddings with order-ideal ranges.

    Elements (t*y, t); (t*y,t)(s*x,s) = (t*y ∧ (ts)*x, ts), (t*y,t)* = (y,1),
    (t*y,t)+ = (t*y,1).  The W-formulas are evaluated independently of
    :func:`m_product`; ``alg.semidirect`` records whether every map is onto.
    """
    T, Y = pa.monoid, pa.lattice
    one = T.identity
    if check:
        flags = classify_action(pa, antistrong=False)
        if not flags.isAction:
            raise RejectedInputError("w_product needs a total action")
        rep = verify_partial_action(pa)
        if not rep.ok:
            raise RejectedInputError(f"action fails {rep.failed[0]}", rep[rep.failed[0]].witness)
    elements = list(dict.fromkeys((pa.act(t, y), t) for t in T.elements for y in Y.elements))

    def pre(t, u):
        y = pa.act_inv(t, u)
        if y is None:
            raise VerificationError(f"{fmt(u)} is not in the range of {fmt(t)}")
        return y

    def mul(a, b):
        (u, t), (w, s) = a, b
        x = pre(s, w)
        ts = T.mul(t, s)
        return (Y.meet(u, pa.act(ts, x)), ts)

    def contains(a):
        return isinstance(a, tuple) and len(a) == 2 and T.contains(a[1]) and pa.act_inv(a[1], a[0]) is not None

    identity = (Y.top, one) if Y.top is not None else None
    alg = _algebra(pa, elements, mul, lambda a: (pre(a[1], a[0]), one), lambda a: (a[0], one),
                   identity, {"construction": "W(T,Y)"}, contains)
    alg.semidirect = all(pa.range(t) == frozenset(Y.elements) for t in T.elements) if Y.closed else None
    return alg


def verify_proper_representation(S):
    """Check that a ↦ (a+, σ(a)) is a (2,1,1)-isomorphism S → M(S/σ, P(S))."""
    sigma = sigma_congruence(S)
    w = proper_witness(S, sigma)
    if w is not None:
        raise RejectedInputError("M(T,Y) representation needs a proper restriction semigroup", w)
    pa = underlying_action(S, sigma)
    M = m_product(pa)
    f = {a: (S.plus(a), pa.sigma_class(a)) for a in S.elements}
    mw = check_morphism(f, S, M)
    mw.target = M
    return mw


# -- double actions ----------------------------------------------------------------

@dataclass
class DoubleAction:
    """A left action ``star`` and right action ``bullet`` of T on Y (dicts keyed (t, y))."""

    monoid: object
    lattice: object
    star: dict
    bullet: dict

    def s(self, t, y):
        return self.star[t, y]

    def b(self, y, t):
        return self.bullet[t, y]

    @property
    def top(self):
        return self.lattice.top


def verify_double_action(da) -> Report:
    T, Y = da.monoid, da.lattice
    Te, Ye = T.elements, Y.elements
    eps, one = Y.top, T.identity
    rep = Report("double action")
    rep.add("top", "Y has an identity", eps is not None, None if eps is not None else ())
    if eps is None:
        return rep
    m, meet, s, b = T.mul, Y.meet, da.s, da.b
    rep.scan("star:action", "1*y = y and s*(t*y) = (st)*y",
             lambda t, u, y: s(one, y) == y and s(t, s(u, y)) == s(m(t, u), y), Te, Te, Ye)
    rep.scan("bullet:action", "y•1 = y and (y•s)•t = y•(st)",
             lambda t, u, y: b(y, one) == y and b(b(y, t), u) == b(y, m(t, u)), Te, Te, Ye)
    rep.scan("z1", "t*(x∧y) = t*x ∧ t*y and (x∧y)•t = x•t ∧ y•t",
             lambda t, x, y: s(t, meet(x, y)) == meet(s(t, x), s(t, y))
             and b(meet(x, y), t) == meet(b(x, t), b(y, t)), Te, Ye, Ye)
    rep.scan("z2", "(t*x)•t = ε•t ∧ x and t*(x•t) = x ∧ t*ε",
             lambda t, x: b(s(t, x), t) == meet(b(eps, t), x) and s(t, b(x, t)) == meet(x, s(t, eps)),
             Te, Ye)
    return rep


def double_to_pda(da, check=True):
    """t·y defined iff y <= ε•t, with value t*y."""
    if check:
        rep = verify_double_action(da)
        if not rep.ok:
            raise RejectedInputError(f"double action fails {rep.failed[0]}", rep[rep.failed[0]].witness)
    Y = da.lattice
    eps = Y.top
    table = {(t, y): da.s(t, y) for t in da.monoid.elements for y in Y.elements if Y.leq(y, da.b(eps, t))}
    return PartialAction.from_table(da.monoid, Y, table, "left", "·")


def pda_to_double(pa):
    """t*y = t·(y ∧ d_t) and y•t = (y ∧ r_t)∘t for a PDA with principal domains."""
    Y = pa.lattice
    if Y.top is None:
        raise RejectedInputError("the semilattice needs an identity")
    flags = classify_action(pa)
    if not flags.isPDA:
        raise RejectedInputError("not a partially defined action", flags.witnesses.get("PDA"))
    star, bullet = {}, {}
    for t in pa.monoid.elements:
        d, r = pa.domain_top(t), pa.range_top(t)
        if d is None or not flags.domainsPrincipal:
            raise RejectedInputError(f"dom of {fmt(t)} is not principal", (t,))
        for y in Y.elements:
            star[t, y] = pa.act(t, Y.meet(y, d))
            bullet[t, y] = pa.act_inv(t, Y.meet(y, r))
    return DoubleAction(pa.monoid, Y, star, bullet)


def y_m_t(da, check=True):
    """Y *_m T = {(y,t) : y <= t*ε}, (x,s)(y,t) = (x ∧ s*y, st), identity (ε,1)."""
    if check:
        verify_double_action(da).require()
    T, Y = da.monoid, da.lattice
    eps, one = Y.top, T.identity
    elements = [(y, t) for t in T.elements for y in Y.elements if Y.leq(y, da.s(t, eps))]
    alg = FiniteRestrictionAlgebra.from_operations(
        elements,
        lambda a, b: (Y.meet(a[0], da.s(a[1], b[0])), T.mul(a[1], b[1])),
        lambda a: (da.b(a[0], a[1]), one),
        lambda a: (a[0], one),
        (eps, one), {"construction": "Y*mT"})
    return alg


def adjoint_witness(pa, da):
    """t·x <= y iff x <= y•t for x <= d_t (and the dual for ∘ and *)."""
    Y = pa.lattice
    T, Ye = pa.monoid.elements, Y.elements
    return counterexample(
        lambda t, x, y: (not Y.leq(x, pa.domain_top(t))
                         or Y.leq(pa.act(t, x), y) == Y.leq(x, da.b(y, t)))
        and (not Y.leq(x, pa.range_top(t))
             or Y.leq(pa.act_inv(t, x), y) == Y.leq(x, da.s(t, y))), T, Ye, Ye)


def same_tables(a, b):
    return same_algebra(a, b)
