"""Globalization of strong partial actions.

Generic mode works over a finite monoid: the pairs Y x T are closed under the
relation (x, tp) -> (p·x, t), classes are materialized, and the induced
preorder, the poset X and the action t*[y,s] = [y,ts] are computed from the
definitions.

Canonical mode works over a free monoid with a partially defined action.  No
classes are materialized: each class is represented by its canonical pair
(y, w) with |w| minimal, and order, meets and the action are evaluated by
formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ._util import GlobalPair, counterexample, fmt
from .actions import PartialAction, classify_action, verify_partial_action
from .algebra import _UnionFind, check_morphism
from .constructions import m_product, w_product
from .errors import MissingDomainTopError, RejectedInputError
from .order import SampledSemilattice
from .report import Report

# -- generic mode -----------------------------------------------------------------


@dataclass
class GlobalPoset:
    """(Y x T)/≈ for a strong left partial action of a finite monoid.

    ``classes`` are the ~-classes (frozensets of pairs); ``points`` are the
    ≈-classes, each a frozenset of ~-classes.  ``geq[A, B]`` is the preorder
    on ~-classes.
    """

    action: PartialAction
    classes: list
    class_of: dict
    geq: dict
    points: list
    point_of: dict
    report: Report = field(default=None)

    def cls(self, y, s):
        return self.class_of[GlobalPair(y, s)]

    def point(self, y, s):
        return self.point_of[self.class_of[GlobalPair(y, s)]]

    def leq(self, P, Q):
        A, B = next(iter(P)), next(iter(Q))
        return self.geq[B, A]

    def act(self, t, P):
        """t*[y,s] = [y,ts], evaluated on a representative."""
        y, s = next(iter(next(iter(P))))
        return self.point(y, self.action.monoid.mul(t, s))

    def embedded(self, y):
        return self.point(y, self.action.monoid.identity)

    def meet(self, P, Q):
        """Greatest lower bound of two points, or None if it does not exist."""
        lower = [R for R in self.points if self.leq(R, P) and self.leq(R, Q)]
        return next((m for m in lower if all(self.leq(R, m) for R in lower)), None)


def build_global_poset_generic(pa, check=True):
    """Classes of ~, the preorder, X = (Y x T)/≈ and the action, with their checks."""
    if pa.side != "left" or not pa.closed:
        raise RejectedInputError("generic globalization needs a left partial action of a finite monoid")
    if check:
        rep = verify_partial_action(pa)
        if not rep.ok:
            raise RejectedInputError(f"partial action fails {rep.failed[0]}", rep[rep.failed[0]].witness)
    flags = classify_action(pa)
    if not flags.isStrong:
        raise RejectedInputError("only strong partial actions can be globalized", flags.witnesses.get("strong"))
    T, Y = pa.monoid, pa.lattice
    pairs = [GlobalPair(y, s) for s in T.elements for y in Y.elements]
    uf = _UnionFind(pairs)
    for x, s in pairs:
        for t, p in T.factorizations(s):
            y = pa.act(p, x)
            if y is not None:
                uf.union(GlobalPair(x, s), GlobalPair(y, t))
    groups = {}
    for q in pairs:
        groups.setdefault(uf.find(q), []).append(q)
    classes = [frozenset(g) for g in groups.values()]
    class_of = {q: C for C in classes for q in C}

    # A >= B iff some (x,s) in A and (y,s) in B with x >= y
    by_word = {C: {} for C in classes}
    for C in classes:
        for x, s in C:
            by_word[C].setdefault(s, []).append(x)
    geq = {}
    for A in classes:
        for B in classes:
            geq[A, B] = any(Y.leq(y, x) for s, xs in by_word[A].items() for x in xs
                            for y in by_word[B].get(s, ()))
    points, point_of = [], {}
    for A in classes:
        if A in point_of:
            continue
        P = frozenset(B for B in classes if geq[A, B] and geq[B, A])
        points.append(P)
        for B in P:
            point_of[B] = P
    gp = GlobalPoset(pa, classes, class_of, geq, points, point_of)
    gp.report = globalization_report(gp)
    return gp


def globalization_report(gp) -> Report:
    """Statements about the classes, the order on X and the action, checked over all classes."""
    pa, T, Y = gp.action, gp.action.monoid, gp.action.lattice
    C, geq = gp.classes, gp.geq
    rep = Report("globalization")

    def transfer(A, B):
        if not geq[A, B]:
            return True
        return all(any(Y.leq(u, z) for u, t2 in B if t2 == t) for z, t in A)
    rep.scan("preorder:transfer", "if A >= B and (z,t) in A then (u,t) in B for some u <= z",
             transfer, C, C)
    rep.scan("preorder", ">= on classes is reflexive and transitive",
             lambda A, B, D: geq[A, A] and (not (geq[A, B] and geq[B, D]) or geq[A, D]), C, C, C)

    def same_value(A):
        vals = {pa.act(s, x) for x, s in A}
        return len(vals) == 1
    rep.scan("classes:action-value", "within a class s·x is defined for all members or none, with one value",
             same_value, C)
    rep.scan("classes:order-equivalent",
             "a class order-equivalent to a different class has no member on which s·x is defined",
             lambda A, B: A == B or not (geq[A, B] and geq[B, A]) or all(pa.act(s, x) is None for x, s in A),
             C, C)
    theta = {y: gp.embedded(y) for y in Y.elements}
    Ybar = set(theta.values())
    rep.add("embed:order-iso", "y -> [y,1] is an order-isomorphism onto its image",
            len(Ybar) == len(Y.elements) and counterexample(
                lambda x, y: Y.leq(x, y) == gp.leq(theta[x], theta[y]), Y.elements, Y.elements) is None)
    rep.scan("embed:ideal", "the image of Y is an order ideal of X",
             lambda P, y: not gp.leq(P, theta[y]) or P in Ybar, gp.points, Y.elements)
    rep.scan("embed:meet", "[x,1] and [y,1] have meet [x∧y,1] in X",
             lambda x, y: gp.meet(theta[x], theta[y]) == theta[Y.meet(x, y)], Y.elements, Y.elements)

    def well_defined(P, t):
        vals = {gp.point(y, T.mul(t, s)) for A in P for y, s in A}
        return len(vals) == 1
    rep.scan("action:well-defined", "[x,s] = [y,p] implies [x,ts] = [y,tp]", well_defined, gp.points, T.elements)
    rep.scan("action:monotone", "t* preserves the order of X",
             lambda t, P, Q: not gp.leq(P, Q) or gp.leq(gp.act(t, P), gp.act(t, Q)), T.elements, gp.points, gp.points)
    rep.scan("action:restricts", "t*[y,1] lies in the image of Y iff t·y is defined, and then equals [t·y,1]",
             lambda t, y: (gp.act(t, theta[y]) in Ybar) == (pa.act(t, y) is not None)
             and (pa.act(t, y) is None or gp.act(t, theta[y]) == theta[pa.act(t, y)]), T.elements, Y.elements)
    rep.scan("action:ideal-range", "if P <= t*[y,1] then P = t*[z,1] for some z <= y",
             lambda P, t, y: not gp.leq(P, gp.act(t, theta[y]))
             or any(gp.act(t, theta[z]) == P for z in Y.down(y)), gp.points, T.elements, Y.elements)

    def mult(x, s, y):
        xs = pa.act_inv(s, x)
        if xs is None:
            return True
        m = gp.meet(theta[x], gp.act(s, theta[y]))
        v = pa.act(s, Y.meet(xs, y))
        return m is not None and v is not None and m == theta[v]
    try:
        rep.scan("mult:meet-formula", "[x,1] ∧ s*[y,1] exists and equals [s·((x∘s)∧y),1]",
                 mult, Y.elements, T.elements, Y.elements)
    except RejectedInputError:
        rep.add("mult:meet-formula", "[x,1] ∧ s*[y,1] exists and equals [s·((x∘s)∧y),1]", None)
    return rep


# -- canonical mode over a free monoid ----------------------------------------------

def canonical_form(pair, pa):
    """(v·y, w) where u = wv and v is the longest suffix of u with v·y defined."""
    y, u = pair
    for i in range(len(u) + 1):
        x = pa.act(u[i:], y)
        if x is not None:
            return GlobalPair(x, u[:i])
    raise RejectedInputError(f"the identity does not act on {fmt(y)}")


def is_canonical(pair, pa):
    return canonical_form(pair, pa) == tuple(pair)


def global_leq(c1, c2, pa):
    """[e,v] <= [f,u] iff u = vp with e∘p defined and e∘p <= f (canonical inputs)."""
    (e, v), (f, u) = c1, c2
    if not u.startswith(v):
        return False
    z = pa.act_inv(u[len(v):], e)
    return z is not None and pa.lattice.leq(z, f)


def _lcp(v, u):
    k = 0
    while k < min(len(v), len(u)) and v[k] == u[k]:
        k += 1
    return v[:k]


def _translate(pa, w, e):
    """w·(e ∧ d_w); the identity term is e itself."""
    if not w:
        return e
    d = pa.domain_top(w)
    if d is None:
        raise MissingDomainTopError(f"dom of {w} is not principal", (w,))
    return pa.act(w, pa.lattice.meet(e, d))


def global_meet(c1, c2, pa):
    """[e,v] ∧ [f,u] = [v'·(e∧d_v') ∧ u'·(f∧d_u'), k] with k the longest common prefix."""
    (e, v), (f, u) = c1, c2
    k = _lcp(v, u)
    g = pa.lattice.meet(_translate(pa, v[len(k):], e), _translate(pa, u[len(k):], f))
    return canonical_form(GlobalPair(g, k), pa)


def global_action(t, c, pa):
    """t*[y,w] = [y,tw], returned in canonical form."""
    return canonical_form(GlobalPair(c[0], t + c[1]), pa)


def global_action_inverse(t, c, pa):
    """The preimage of a canonical pair under t*, or None when it is not in the range."""
    e, v = c
    if v.startswith(t):
        return GlobalPair(e, v[len(t):])
    if t.startswith(v):
        z = pa.act_inv(t[len(v):], e)
        return None if z is None else GlobalPair(z, "")
    return None


def canonical_sample(pa):
    """Canonical pairs (y, w) with y sampled in Y and w a sampled word."""
    return [GlobalPair(y, w) for w in pa.monoid.elements for y in pa.lattice.elements
            if is_canonical((y, w), pa)]


def global_semilattice(pa):
    """X as a sampled semilattice of canonical pairs (order and meets memoized)."""
    @lru_cache(maxsize=None)
    def meet(c1, c2):
        return global_meet(c1, c2, pa)

    @lru_cache(maxsize=None)
    def leq(c1, c2):
        return global_leq(c1, c2, pa)

    return SampledSemilattice(canonical_sample(pa), leq, meet, top=None, bound=pa.bound, name="X")


def global_partial_action(pa, X=None):
    """The total action of the free monoid on X, with its inverse."""
    X = X or global_semilattice(pa)
    return PartialAction(pa.monoid, X, lambda t, c: global_action(t, c, pa),
                         lambda t, c: global_action_inverse(t, c, pa), "left", None, "*")


def _require_canonical_mode(pa, relaxed):
    flags = classify_action(pa)
    if not flags.isPDA:
        raise RejectedInputError("canonical globalization needs a partially defined action",
                                 flags.witnesses.get("PDA"))
    ok = flags.domainsPrincipalExceptIdentity if relaxed else flags.domainsPrincipal
    if not ok:
        bad = next(t for t in pa.monoid.elements if (t or not relaxed) and pa.domain_top(t) is None)
        raise MissingDomainTopError(f"dom of {fmt(bad) or 'ε'} is not principal", (bad,))
    return flags


def build_w_of_global(pa, relaxed=None):
    """W(T, X) over the canonical-pair sample, with the checks that allow forming it.

    ``relaxed`` allows a non-principal domain for the empty word (free
    restriction semigroups and covers of semigroups); by default it is used
    exactly when Y has no top.
    """
    relaxed = pa.lattice.top is None if relaxed is None else relaxed
    _require_canonical_mode(pa, relaxed)
    X = global_semilattice(pa)
    gpa = global_partial_action(pa, X)
    W = w_product(gpa, check=False)
    W.global_action = gpa
    W.report = global_report(pa, X, gpa)
    return W


def global_report(pa, X, gpa) -> Report:
    """Semilattice and action statements for X, quantified over the canonical sample."""
    Xs, T = X.elements, pa.monoid.elements
    leq, meet = X.leq, X.meet
    rep = Report("global semilattice", bound=pa.bound)
    rep.scan("X:order", "<= on X is reflexive, antisymmetric and transitive",
             lambda a, b, c: leq(a, a) and (not (leq(a, b) and leq(b, a)) or a == b)
             and (not (leq(a, b) and leq(b, c)) or leq(a, c)), Xs, Xs, Xs)
    rep.scan("X:meet", "the meet formula gives the greatest lower bound",
             lambda a, b, c: (m := meet(a, b)) is not None and leq(m, a) and leq(m, b)
             and (not (leq(c, a) and leq(c, b)) or leq(c, m)), Xs, Xs, Xs)
    rep.scan("X:action-monotone", "t* is an order embedding",
             lambda t, a, b: leq(a, b) == leq(gpa.act(t, a), gpa.act(t, b)), T, Xs, Xs)
    rep.scan("X:action-ideal-range", "anything below t*c is t*c' for some c' <= c",
             lambda t, a, c: not leq(a, gpa.act(t, c))
             or ((p := gpa.act_inv(t, a)) is not None and leq(p, c) and gpa.act(t, p) == a), T, Xs, Xs)
    rep.scan("X:action", "ε*c = c and s*(t*c) = (st)*c",
             lambda s, t, c: gpa.act("", c) == c and gpa.act(s, gpa.act(t, c)) == gpa.act(s + t, c), T, T, Xs)
    return rep


def embed_mty(pa, W=None):
    """(y, t) -> ([y, ε], t) from M(T, Y) into W(T, X), checked on the M-sample."""
    M = m_product(pa, check=False)
    W = W or build_w_of_global(pa)
    gpa = W.global_action

    def f(a):
        return (GlobalPair(a[0], ""), a[1])

    mw = check_morphism(f, M, W)
    mw.source, mw.target = M, W

    def image_char(y, t):
        c = gpa.act_inv(t, GlobalPair(y, ""))
        in_image = c is not None and c.word == ""
        return in_image == (pa.act_inv(t, y) is not None)
    mw.image_witness = counterexample(image_char, pa.lattice.elements, pa.monoid.elements)
    return mw


# -- brute-force oracle on a truncation ------------------------------------------

def truncated_classes(pa):
    """~-classes of the sampled pairs, by closing (x, tp) -> (p·x, t) within the sample."""
    pairs = [GlobalPair(y, w) for w in pa.monoid.elements for y in pa.lattice.elements]
    index = set(pairs)
    uf = _UnionFind(pairs)
    for x, s in pairs:
        for i in range(len(s) + 1):
            y = pa.act(s[i:], x)
            q = GlobalPair(y, s[:i])
            if y is not None and q in index:
                uf.union(GlobalPair(x, s), q)
    return {q: uf.find(q) for q in pairs}


def brute_force_order(pa, classes):
    """A >= B iff some (x,s) in A and (y,s) in B with x >= y, over sampled members."""
    members = {}
    for q, r in classes.items():
        members.setdefault(r, []).append(q)
    Y = pa.lattice
    geq = {}
    for A, ma in members.items():
        for B, mb in members.items():
            geq[A, B] = any(s == t and Y.leq(y, x) for x, s in ma for y, t in mb)
    return members, geq
