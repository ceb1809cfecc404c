"""Partial actions of monoids on semilattices.

A :class:`PartialAction` stores ``act(t, y)`` (None when undefined) and,
when available, the reverse ``act_inv(t, y)``.  For a left action ``act(t, y)``
is t·y; for a right action it is y∘t.  Reversal swaps the two maps and the
side, so it is an involution by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ._util import counterexample, fmt
from .errors import CannotReverseError, MalformedInputError, RejectedInputError
from .monoids import FiniteMonoid
from .order import is_order_ideal
from .report import Report


class PartialAction:
    def __init__(self, monoid, lattice, act, act_inv=None, side="left", domain_top=None, name="·"):
        if side not in ("left", "right"):
            raise MalformedInputError("side must be 'left' or 'right'")
        self.monoid = monoid
        self.lattice = lattice
        self._act = act
        self._act_inv = act_inv
        self.side = side
        self._domain_top = domain_top
        self.name = name

    @classmethod
    def from_table(cls, monoid, lattice, table, side="left", name="·"):
        """``table`` maps (t, y) to the value of t acting on y; missing = undefined."""
        lat = set(lattice.elements)
        mon = set(monoid.elements) if monoid.closed else None
        for (t, y), v in table.items():
            if (mon is not None and t not in mon) or (mon is None and not monoid.contains(t)):
                raise MalformedInputError(f"{fmt(t)} is not a monoid element")
            if y not in lat or v not in lat:
                raise MalformedInputError(f"action entry {fmt((t, y, v))} leaves the semilattice")
        table = dict(table)
        inverse = {}
        for (t, y), v in table.items():
            if (t, v) in inverse:
                inverse[t, v] = _NOT_INJECTIVE
            else:
                inverse[t, v] = y
        pa = cls(monoid, lattice, lambda t, y: table.get((t, y)), None, side, name=name)
        pa.table = table
        pa._inverse_table = inverse
        return pa

    @classmethod
    def from_generators(cls, monoid, lattice, gen, gen_inv, side="left", domain_top=None, name="·"):
        """Extend generator maps to words by composition (a partially defined action).

        For a left action the word a1...an acts as a1·(a2·(...(an·y))).
        """
        def act(w, y):
            for a in reversed(w) if side == "left" else w:
                if y is None:
                    return None
                y = gen(a, y)
            return y

        def act_inv(w, y):
            for a in w if side == "left" else reversed(w):
                if y is None:
                    return None
                y = gen_inv(a, y)
            return y

        return cls(monoid, lattice, act, act_inv, side, domain_top, name)

    # -- evaluation

    def act(self, t, y):
        return self._act(t, y)

    def act_inv(self, t, y):
        if self._act_inv is not None:
            return self._act_inv(t, y)
        inv = getattr(self, "_inverse_table", None)
        if inv is None:
            raise CannotReverseError("no inverse available for this partial action")
        v = inv.get((t, y))
        if v is _NOT_INJECTIVE:
            raise CannotReverseError(f"the map of {fmt(t)} is not injective", (t,))
        return v

    def defined(self, t, y):
        return self.act(t, y) is not None

    def then(self, t, s):
        """Monoid element acting as 'first t, then s'."""
        return self.monoid.mul(s, t) if self.side == "left" else self.monoid.mul(t, s)

    def domain(self, t):
        return frozenset(y for y in self.lattice.elements if self.act(t, y) is not None)

    def range(self, t):
        if self._act_inv is not None:
            return frozenset(y for y in self.lattice.elements if self._act_inv(t, y) is not None)
        return frozenset(v for y in self.lattice.elements if (v := self.act(t, y)) is not None)

    def domain_top(self, t):
        """Top element of dom(t) when principal, else None."""
        if self._domain_top is not None:
            return self._domain_top(t)
        return self.lattice.maximum(self.domain(t))

    def range_top(self, t):
        d = self.domain_top(t)
        return self.lattice.maximum(self.range(t)) if d is None else self.act(t, d)

    @property
    def closed(self):
        return self.monoid.closed and self.lattice.closed

    @property
    def bound(self):
        parts = [b for b in (getattr(self.monoid, "bound", None) and f"|word|<={self.monoid.bound}",
                             self.lattice.bound) if b]
        return "; ".join(parts) or None

    def reverse(self):
        """The reverse partial action (t ↦ φ_t⁻¹), on the opposite side."""
        if self._act_inv is None:
            inv = getattr(self, "_inverse_table", None)
            if inv is None:
                raise CannotReverseError("no inverse available for this partial action")
            for (t, _y), v in inv.items():
                if v is _NOT_INJECTIVE:
                    raise CannotReverseError(f"the map of {fmt(t)} is not injective", (t,))
            table = {(t, y): v for (t, y), v in inv.items()}
            rev = PartialAction.from_table(self.monoid, self.lattice, table,
                                           "right" if self.side == "left" else "left", _rev_name(self.name))
            return rev
        top = None
        if self._domain_top is not None:
            top = lambda t: (lambda d: None if d is None else self._act(t, d))(self._domain_top(t))
        return PartialAction(self.monoid, self.lattice, self._act_inv, self._act,
                             "right" if self.side == "left" else "left", top, _rev_name(self.name))

    def as_table(self):
        return {(t, y): v for t in self.monoid.elements for y in self.lattice.elements
                if (v := self.act(t, y)) is not None}

    def __repr__(self):
        return f"PartialAction({self.side}, {self.monoid!r}, {len(self.lattice.elements)} points)"


_NOT_INJECTIVE = object()


def _rev_name(n):
    return {"·": "∘", "∘": "·"}.get(n, n + "'")


def same_action(p, q):
    """Equal act tables over the common sample."""
    return p.side == q.side and all(p.act(t, y) == q.act(t, y)
                                    for t in p.monoid.elements for y in p.lattice.elements)


# -- axioms -----------------------------------------------------------------------

def verify_partial_action(pa) -> Report:
    """LP1, LP2 and axioms (A), (B), (C), each with its first counterexample.

    Over a free monoid the quantifiers range over the sampled words (and the
    lattice sample); the report carries that bound.
    """
    T, Y = pa.monoid.elements, pa.lattice.elements
    if pa.lattice.closed:
        lat = set(Y)
        for t, y in product(T, Y):
            v = pa.act(t, y)
            if v is not None and v not in lat:
                raise MalformedInputError(f"{fmt(t)} maps {fmt(y)} outside the semilattice")
    L = pa.lattice
    one = pa.monoid.identity
    rep = Report(f"{pa.side} partial action", bound=pa.bound)
    rep.scan("LP1", "1 acts as the identity", lambda y: pa.act(one, y) == y, Y)

    def lp2(t, s, y):
        x = pa.act(t, y)
        if x is None:
            return True
        z = pa.act(s, x)
        return z is None or pa.act(pa.then(t, s), y) == z
    rep.scan("LP2", "if t acts on y and s acts on the result, the product acts with the same value",
             lp2, T, T, Y)
    doms = {t: pa.domain(t) for t in T}
    rans = {t: pa.range(t) for t in T}
    rep.scan("A", "dom and ran of every element are order ideals",
             lambda t: is_order_ideal(doms[t], L) and is_order_ideal(rans[t], L), T)
    rep.scan("B", "each map is an order-isomorphism from its domain onto its range",
             lambda t, x, y: x not in doms[t] or y not in doms[t]
             or (L.leq(x, y) == L.leq(pa.act(t, x), pa.act(t, y)) and (x == y) == (pa.act(t, x) == pa.act(t, y))),
             T, Y, Y)
    rep.scan("B:onto", "the image of dom lies in ran and every point of ran is hit",
             lambda t: all(pa.act(t, y) in rans[t] or not L.closed for y in doms[t])
             and (not L.closed or all(any(pa.act(t, y) == v for y in doms[t]) for v in rans[t])), T)
    rep.scan("C", "every domain is nonempty", lambda t: bool(doms[t]), T)
    return rep


def is_partial_action(pa):
    return verify_partial_action(pa).ok


# -- classification ---------------------------------------------------------------

@dataclass
class ActionClassification:
    isAction: bool
    isStrong: bool
    isAntistrong: bool | None
    isPDA: bool
    domainsPrincipal: bool
    domainsPrincipalExceptIdentity: bool
    bound: str | None = None
    witnesses: dict | None = None


def strong_witness(pa):
    """(S): if t acts on y and (then t s) acts on y, s acts on t·y."""
    T, Y = pa.monoid.elements, pa.lattice.elements
    return counterexample(
        lambda t, s, y: (x := pa.act(t, y)) is None or pa.act(pa.then(t, s), y) is None
        or pa.act(s, x) is not None, T, T, Y)


def pda_witness(pa):
    T, Y = pa.monoid.elements, pa.lattice.elements

    def pda(t, s, y):
        x = pa.act(t, y)
        both = x is not None and pa.act(s, x) is not None
        return (pa.act(pa.then(t, s), y) is not None) == both
    return counterexample(pda, T, T, Y)


def classify_action(pa, antistrong=True) -> ActionClassification:
    """Exhaustive flags within the (possibly sampled) domains.

    ``isAntistrong`` is the strongness of the reverse action.  Asserts that a
    partially defined action is strong and antistrong and that the reverse
    shares the PDA flag.
    """
    T, Y = pa.monoid.elements, pa.lattice.elements
    wit = {}
    total = all(pa.act(t, y) is not None for t in T for y in Y)
    ws = strong_witness(pa)
    wp = pda_witness(pa)
    principal = {}
    for t in T:
        top = pa.domain_top(t)
        principal[t] = (top is not None and pa.act(t, top) is not None
                        and pa.domain(t) == frozenset(y for y in Y if pa.lattice.leq(y, top)))
    anti = None
    if antistrong:
        try:
            rev = pa.reverse()
        except CannotReverseError:
            rev = None
        if rev is not None:
            anti = strong_witness(rev) is None
            if (pda_witness(rev) is None) != (wp is None):
                raise AssertionError("a partial action and its reverse disagree on PDA")
    if ws is not None:
        wit["strong"] = ws
    if wp is not None:
        wit["PDA"] = wp
    flags = ActionClassification(
        isAction=total, isStrong=ws is None, isAntistrong=anti, isPDA=wp is None,
        domainsPrincipal=all(principal.values()),
        domainsPrincipalExceptIdentity=all(v for t, v in principal.items() if t != pa.monoid.identity),
        bound=pa.bound, witnesses=wit)
    if flags.isPDA and not (flags.isStrong and anti is not False):
        raise AssertionError("a partially defined action must be strong and antistrong")
    return flags


# -- the partial action underlying a proper restriction semigroup -----------------

def quotient_monoid(alg, sigma):
    """S/σ as a :class:`FiniteMonoid`; elements are '[rep]' names."""
    reps = {cls: min(cls, key=alg.elements.index) for cls in sigma.classes}
    name = {cls: f"[{fmt(reps[cls])}]" for cls in sigma.classes}
    elements = [name[c] for c in sigma.classes]
    table = {(name[A], name[B]): name[sigma.class_of[alg.mul(reps[A], reps[B])]]
             for A in sigma.classes for B in sigma.classes}
    e = next(iter(alg.star(a) for a in alg.elements))
    ident = name[sigma.class_of[e]]
    M = FiniteMonoid(elements, table, ident, name="S/σ")
    members = {name[c]: c for c in sigma.classes}
    return M, members, lambda a: name[sigma.class_of[a]]


def underlying_action(S, sigma=None):
    """Left partial action of S/σ on P(S): t·e defined iff some a ∈ t has a* >= e; value (a e)+.

    For a finite S, σ is computed exactly.  For a bounded M(T,Y) (``S.action``
    set) the σ-classes are the T-fibres and the action is evaluated over the
    sampled elements of each fibre; the result acts by T on Y.
    """
    from .algebra import projections, sigma_congruence

    if not S.closed:
        if S.action is None:
            raise RejectedInputError("underlying action of a bounded algebra needs its M(T,Y) structure")
        pa0 = S.action
        fibre = {}
        for a in S.elements:
            fibre.setdefault(a[1], []).append(a)

        def act(t, e):
            for a in fibre.get(t, ()):
                astar = S.star(a)
                if _proj_leq(S, (e, pa0.monoid.identity), astar):
                    return S.plus(S.mul(a, (e, pa0.monoid.identity)))[0]
            return None

        return PartialAction(pa0.monoid, pa0.lattice, act, None, "left", name="·")

    from .algebra import proper_witness

    sigma = sigma or sigma_congruence(S)
    if proper_witness(S, sigma) is not None:
        raise RejectedInputError("the underlying partial action is only defined for proper algebras",
                                 proper_witness(S, sigma))
    T, members, cls = quotient_monoid(S, sigma)
    P = projections(S).semilattice
    table = {}
    for t in T.elements:
        for e in P.elements:
            vals = {S.plus(S.mul(a, e)) for a in members[t] if P.leq(e, S.star(a))}
            if len(vals) > 1:
                raise RejectedInputError(f"{t}·{fmt(e)} is not well defined")
            if vals:
                table[t, e] = vals.pop()
    pa = PartialAction.from_table(T, P, table, "left", "·")
    pa.sigma_class = cls
    return pa


def _proj_leq(S, e, f):
    return S.mul(e, f) == e

