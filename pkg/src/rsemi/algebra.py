"""Restriction semigroups as (2,1,1)-algebras and exhaustive classification.

Two carriers are supported:

* :class:`FiniteRestrictionAlgebra` -- a finite algebra given by tables;
  every predicate is decided exactly.
* :class:`BoundedRestrictionAlgebra` -- an infinite algebra (e.g. one built
  over a free monoid) with exact operations and a finite ``elements`` sample;
  quantified statements are checked over the sample and carry its bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ._util import counterexample, fmt
from .errors import MalformedInputError, VerificationError
from .order import FiniteSemilattice, build_semilattice
from .report import Report


class _Algebra:
    closed = True
    bound = None
    identity = None
    action = None  # set by constructions that build M(T,Y)
    provenance = None

    def name(self, a):
        return fmt(a)

    def __len__(self):
        return len(self.elements)


class FiniteRestrictionAlgebra(_Algebra):
    """Finite (2,1,1)- or (2,1,1,0)-algebra with arbitrary hashable elements."""

    def __init__(self, elements, mul, star, plus, identity=None, provenance=None):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise MalformedInputError("repeated element")
        self._index = {a: i for i, a in enumerate(self.elements)}
        self.table = dict(mul)
        self.star_map = dict(star)
        self.plus_map = dict(plus)
        self.identity = identity
        self.provenance = provenance
        for a, b in product(self.elements, repeat=2):
            if (a, b) not in self.table or self.table[a, b] not in self._index:
                raise MalformedInputError(f"product {fmt(a)}·{fmt(b)} missing or outside the element set")
        for a in self.elements:
            for m, what in ((self.star_map, "*"), (self.plus_map, "+")):
                if a not in m or m[a] not in self._index:
                    raise MalformedInputError(f"{fmt(a)}{what} missing or outside the element set")
        if identity is not None and identity not in self._index:
            raise MalformedInputError("identity is not an element")

    @classmethod
    def from_operations(cls, elements, mul, star, plus, identity=None, provenance=None):
        """Materialize tables from callables; raises if the set is not closed."""
        elements = tuple(elements)
        table = {(a, b): mul(a, b) for a in elements for b in elements}
        return cls(elements, table, {a: star(a) for a in elements}, {a: plus(a) for a in elements},
                   identity, provenance)

    @classmethod
    def from_indices(cls, names, mul, star, plus, identity=None):
        """Build from row-major index tables as in the algebra file format."""
        n = len(names)
        if len(mul) != n:
            raise MalformedInputError(f"mul table has {len(mul)} rows, expected {n}")
        for i, row in enumerate(mul):
            if len(row) != n:
                raise MalformedInputError(f"mul row {i} has length {len(row)}, expected {n}")
        if len(star) != n or len(plus) != n:
            raise MalformedInputError("star/plus must list one index per element")

        def el(k, where):
            if not isinstance(k, int) or not 0 <= k < n:
                raise MalformedInputError(f"index {k!r} out of range in {where}")
            return names[k]

        table = {(names[i], names[j]): el(k, f"mul row {i}") for i, row in enumerate(mul) for j, k in enumerate(row)}
        return cls(names, table,
                   {names[i]: el(k, "star") for i, k in enumerate(star)},
                   {names[i]: el(k, "plus") for i, k in enumerate(plus)},
                   None if identity is None else el(identity, "identity"))

    def mul(self, a, b):
        return self.table[a, b]

    def star(self, a):
        return self.star_map[a]

    def plus(self, a):
        return self.plus_map[a]

    def index(self, a):
        return self._index[a]

    def __contains__(self, a):
        return a in self._index

    def __repr__(self):
        return f"FiniteRestrictionAlgebra({len(self.elements)} elements)"


class BoundedRestrictionAlgebra(_Algebra):
    """An algebra with exact operations quantified over a finite sample."""

    closed = False

    def __init__(self, sample, mul, star, plus, identity=None, bound=None, provenance=None,
                 contains=None):
        self.elements = tuple(sample)
        self._mul, self._star, self._plus = mul, star, plus
        self.identity = identity
        self.bound = bound
        self.provenance = provenance
        self._contains = contains

    def mul(self, a, b):
        return self._mul(a, b)

    def star(self, a):
        return self._star(a)

    def plus(self, a):
        return self._plus(a)

    def __contains__(self, a):
        if self._contains is not None:
            return self._contains(a)
        return a in set(self.elements)

    def __repr__(self):
        return f"BoundedRestrictionAlgebra({len(self.elements)} sampled, bound={self.bound})"


# -- axioms -----------------------------------------------------------------

AXIOMS = [
    ("xx*=x", "x x* = x", 1, lambda S, x: S.mul(x, S.star(x)) == x),
    ("x*y*=y*x*", "x* y* = y* x*", 2,
     lambda S, x, y: S.mul(S.star(x), S.star(y)) == S.mul(S.star(y), S.star(x))),
    ("(xy*)*=x*y*", "(x y*)* = x* y*", 2,
     lambda S, x, y: S.star(S.mul(x, S.star(y))) == S.mul(S.star(x), S.star(y))),
    ("x*y=y(xy)*", "x* y = y (x y)*", 2,
     lambda S, x, y: S.mul(S.star(x), y) == S.mul(y, S.star(S.mul(x, y)))),
    ("x+x=x", "x+ x = x", 1, lambda S, x: S.mul(S.plus(x), x) == x),
    ("x+y+=y+x+", "x+ y+ = y+ x+", 2,
     lambda S, x, y: S.mul(S.plus(x), S.plus(y)) == S.mul(S.plus(y), S.plus(x))),
    ("(x+y)+=x+y+", "(x+ y)+ = x+ y+", 2,
     lambda S, x, y: S.plus(S.mul(S.plus(x), y)) == S.mul(S.plus(x), S.plus(y))),
    ("xy+=(xy)+x", "x y+ = (x y)+ x", 2,
     lambda S, x, y: S.mul(x, S.plus(y)) == S.mul(S.plus(S.mul(x, y)), x)),
    ("(x+)*=x+", "(x+)* = x+", 1, lambda S, x: S.star(S.plus(x)) == S.plus(x)),
    ("(x*)+=x*", "(x*)+ = x*", 1, lambda S, x: S.plus(S.star(x)) == S.star(x)),
    ("(xy)*=(x*y)*", "(x y)* = (x* y)*", 2,
     lambda S, x, y: S.star(S.mul(x, y)) == S.star(S.mul(S.star(x), y))),
    ("(xy)+=(xy+)+", "(x y)+ = (x y+)+", 2,
     lambda S, x, y: S.plus(S.mul(x, y)) == S.plus(S.mul(x, S.plus(y)))),
]


def verify_restriction_axioms(alg) -> Report:
    """Check associativity and every restriction identity over ``alg.elements``.

    Failing statements carry the first counterexample in element order.
    """
    if alg.closed:
        # constructor already validated totality; re-check for mutated tables
        for a, b in product(alg.elements, repeat=2):
            if alg.mul(a, b) not in alg:
                raise MalformedInputError(f"product {fmt(a)}·{fmt(b)} outside the element set")
    E = alg.elements
    rep = Report("restriction axioms", bound=alg.bound)
    rep.scan("assoc", "(x y) z = x (y z)",
             lambda x, y, z: alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)), E, E, E)
    for id_, text, arity, pred in AXIOMS:
        rep.scan(id_, text, lambda *xs, pred=pred: pred(alg, *xs), *([E] * arity))
    if alg.identity is not None:
        one = alg.identity
        rep.scan("identity", "1 x = x 1 = x", lambda x: alg.mul(one, x) == x and alg.mul(x, one) == x, E)
        rep.add("1*=1+=1", "1* = 1+ = 1", alg.star(one) == one and alg.plus(one) == one,
                None if alg.star(one) == one and alg.plus(one) == one else (one,))
    return rep


def is_restriction(alg):
    return verify_restriction_axioms(alg).ok


# -- projections and the natural order ----------------------------------------

@dataclass(frozen=True)
class ProjectionSet:
    elements: frozenset
    semilattice: FiniteSemilattice | None


def projection_elements(alg):
    return frozenset(alg.star(a) for a in alg.elements)


def projections(alg) -> ProjectionSet:
    """E = {x*} = {x+}, with its semilattice structure when ``alg`` is finite."""
    stars = frozenset(alg.star(a) for a in alg.elements)
    pluses = frozenset(alg.plus(a) for a in alg.elements)
    if alg.closed and stars != pluses:
        raise VerificationError("images of * and + differ")
    bad = [e for e in stars if not (alg.star(e) == e and alg.plus(e) == e)]
    if bad:
        raise VerificationError(f"projection {fmt(bad[0])} is not fixed by * and +")
    if not alg.closed:
        return ProjectionSet(stars | pluses, None)
    els = [a for a in alg.elements if a in stars]
    Y = build_semilattice(els, meet={(e, f): alg.mul(e, f) for e in els for f in els}, name="P(S)")
    return ProjectionSet(stars, Y)


def leq_natural(alg, a, b, E=None):
    """a <= b iff a = a+ b (equivalently a = e b for some projection e)."""
    return a == alg.mul(alg.plus(a), b)


def natural_order(alg, check=True):
    """The natural partial order as a set of pairs (a, b) meaning a <= b.

    Computed from the definition (a = e b for some projection e); with
    ``check`` the six standard characterizations are verified as well.
    """
    E = sorted(projection_elements(alg), key=alg.elements.index)
    els = alg.elements
    order = frozenset((a, b) for a in els for b in els if any(alg.mul(e, b) == a for e in E))
    if check:
        natural_order_report(alg, order, E).require()
    return order


def natural_order_report(alg, order=None, E=None) -> Report:
    els = alg.elements
    E = E if E is not None else sorted(projection_elements(alg), key=els.index)
    order = order if order is not None else natural_order(alg, check=False)
    le = lambda a, b: (a, b) in order
    m, st, pl = alg.mul, alg.star, alg.plus
    rep = Report("natural order", bound=alg.bound)
    rep.scan("order:right-form", "a <= b iff a = b f for some projection f",
             lambda a, b: le(a, b) == any(m(b, f) == a for f in E), els, els)
    rep.scan("order:star-plus-form", "a <= b iff a = b a* iff a = a+ b",
             lambda a, b: le(a, b) == (a == m(b, st(a))) == (a == m(pl(a), b)), els, els)
    rep.scan("order:absorb", "e a = a implies e >= a+; a e = a implies e >= a*",
             lambda e, a: (m(e, a) != a or le(pl(a), e)) and (m(a, e) != a or le(st(a), e)), E, els)
    rep.scan("order:below", "a e <= a and e a <= a", lambda a, e: le(m(a, e), a) and le(m(e, a), a), els, E)
    rep.scan("order:compatible-mul", "a >= b implies a c >= b c and c a >= c b",
             lambda a, b, c: not le(b, a) or (le(m(b, c), m(a, c)) and le(m(c, b), m(c, a))), els, els, els)
    rep.scan("order:compatible-unary", "a >= b implies a* >= b* and a+ >= b+",
             lambda a, b: not le(b, a) or (le(st(b), st(a)) and le(pl(b), pl(a))), els, els)
    rep.scan("order:partial-order", "<= is reflexive, antisymmetric and transitive",
             lambda a, b, c: le(a, a) and (not (le(a, b) and le(b, a)) or a == b)
             and (not (le(a, b) and le(b, c)) or le(a, c)), els, els, els)
    return rep


# -- sigma ----------------------------------------------------------------------

@dataclass
class SigmaPartition:
    classes: tuple
    class_of: dict
    maxima: dict = field(default_factory=dict)

    def related(self, a, b):
        return self.class_of[a] == self.class_of[b]

    def key(self, a):
        return self.class_of[a]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


def generated_congruence(alg, pairs):
    """Least (2,1,1)-congruence containing ``pairs`` (fixed-point closure).

    Returns a dict mapping each element to a canonical representative.
    """
    els = alg.elements
    uf = _UnionFind(els)
    for a, b in pairs:
        uf.union(a, b)
    changed = True
    while changed:
        changed = False
        for a in els:
            r = uf.find(a)
            if r == a:
                continue
            changed |= uf.union(alg.star(a), alg.star(r))
            changed |= uf.union(alg.plus(a), alg.plus(r))
            for c in els:
                changed |= uf.union(alg.mul(a, c), alg.mul(r, c))
                changed |= uf.union(alg.mul(c, a), alg.mul(c, r))
    return {a: uf.find(a) for a in els}


def sigma_congruence(alg, check=True) -> SigmaPartition:
    """The least congruence identifying all projections.

    Computed from ``a σ b iff e a = e b for some projection e``.  With
    ``check`` the right-hand characterization and the least-congruence property
    (via congruence generation from E x E) are verified.
    """
    if not alg.closed:
        raise MalformedInputError("sigma is only computed on finite algebras")
    els = alg.elements
    E = sorted(projection_elements(alg), key=els.index)
    rel = {(a, b) for a in els for b in els if any(alg.mul(e, a) == alg.mul(e, b) for e in E)}
    classes, class_of = [], {}
    for a in els:
        if a in class_of:
            continue
        cls = frozenset(b for b in els if (a, b) in rel)
        classes.append(cls)
        for b in cls:
            class_of[b] = cls
    if check:
        rep = Report("sigma")
        rep.scan("sigma:right-form", "e a = e b for some e iff a e = b e for some e",
                 lambda a, b: ((a, b) in rel) == any(alg.mul(a, e) == alg.mul(b, e) for e in E), els, els)
        gen = generated_congruence(alg, [(E[0], e) for e in E])
        rep.scan("sigma:least", "sigma equals the congruence generated by E x E",
                 lambda a, b: ((a, b) in rel) == (gen[a] == gen[b]), els, els)
        rep.require()
    order = natural_order(alg, check=False)
    maxima = {}
    for cls in classes:
        top = [m for m in cls if all((b, m) in order for b in cls)]
        maxima[cls] = top[0] if top else None
    return SigmaPartition(tuple(classes), class_of, maxima)


# -- classification -----------------------------------------------------------

@dataclass
class ClassificationFlags:
    isProper: bool
    isAmple: bool
    isFRestriction: bool
    isLeftExtraProper: bool | None
    isRightExtraProper: bool | None
    isUltraProper: bool | None
    isUltraFRestriction: bool | None
    sigmaIsPerfect: bool
    isExtraProper: bool | None = None
    isFAMonoid: bool | None = None
    isMonoid: bool = False
    witnesses: dict = field(default_factory=dict)

    def as_dict(self):
        return {k: v for k, v in self.__dict__.items() if k != "witnesses"}


def proper_witness(alg, sigma):
    """First pair violating properness, or None."""
    els = alg.elements
    return counterexample(
        lambda a, b: a == b or not sigma.related(a, b)
        or (alg.star(a) != alg.star(b) and alg.plus(a) != alg.plus(b)), els, els)


def ample_witness(alg):
    els = alg.elements
    m = alg.mul
    return counterexample(
        lambda a, b, c: (m(a, c) != m(b, c) or m(a, alg.plus(c)) == m(b, alg.plus(c)))
        and (m(c, a) != m(c, b) or m(alg.star(c), a) == m(alg.star(c), b)), els, els, els)


def ep_right_witness(alg, sigma):
    """(EP)^r: s σ t u implies t+ s = t v for some v σ u."""
    els, m = alg.elements, alg.mul
    return counterexample(
        lambda s, t, u: not sigma.related(s, m(t, u))
        or any(m(alg.plus(t), s) == m(t, v) for v in sigma.class_of[u]), els, els, els)


def ep_left_witness(alg, sigma):
    """(EP)^l: s σ u t implies s t* = v t for some v σ u."""
    els, m = alg.elements, alg.mul
    return counterexample(
        lambda s, t, u: not sigma.related(s, m(u, t))
        or any(m(s, alg.star(t)) == m(v, t) for v in sigma.class_of[u]), els, els, els)


def sigma_is_perfect(alg, sigma):
    """Is the elementwise product of any two σ-classes exactly one σ-class?"""
    for A, B in product(sigma.classes, repeat=2):
        prod = frozenset(alg.mul(a, b) for a in A for b in B)
        if prod not in sigma.classes:
            return False
    return True


def classify(alg) -> ClassificationFlags:
    """Decide every classification predicate exhaustively on a finite algebra.

    Extra/ultra properness is computed twice, by the element-wise (EP)
    conditions and by classifying the underlying partial action; a
    disagreement raises :class:`VerificationError`.
    """
    from .actions import classify_action, underlying_action

    if not alg.closed:
        raise MalformedInputError("classify needs a finite algebra; use classify_action on bounded models")
    sigma = sigma_congruence(alg)
    w_proper = proper_witness(alg, sigma)
    w_ample = ample_witness(alg)
    proper = w_proper is None
    f_rest = all(m is not None for m in sigma.maxima.values())
    flags = ClassificationFlags(
        isProper=proper, isAmple=w_ample is None, isFRestriction=f_rest,
        isLeftExtraProper=None, isRightExtraProper=None, isUltraProper=None,
        isUltraFRestriction=None, sigmaIsPerfect=sigma_is_perfect(alg, sigma),
        isMonoid=alg.identity is not None)
    if w_proper is not None:
        flags.witnesses["proper"] = w_proper
    if w_ample is not None:
        flags.witnesses["ample"] = w_ample
    if not proper:
        return flags
    w_r, w_l = ep_right_witness(alg, sigma), ep_left_witness(alg, sigma)
    pa = underlying_action(alg, sigma=sigma)
    left = classify_action(pa)
    right = classify_action(pa.reverse())
    if (w_l is None) != left.isStrong or (w_r is None) != right.isStrong:
        raise VerificationError("(EP) conditions disagree with strongness of the underlying actions")
    if left.isPDA != right.isPDA:
        raise VerificationError("underlying left and right actions disagree on being partially defined actions")
    flags.isLeftExtraProper = w_l is None
    flags.isRightExtraProper = w_r is None
    flags.isExtraProper = flags.isLeftExtraProper and flags.isRightExtraProper
    flags.isUltraProper = left.isPDA
    flags.isUltraFRestriction = flags.isUltraProper and f_rest
    flags.isFAMonoid = flags.isAmple and flags.isExtraProper and f_rest
    if w_l is not None:
        flags.witnesses["EP_left"] = w_l
    if w_r is not None:
        flags.witnesses["EP_right"] = w_r
    return flags


# -- morphisms ------------------------------------------------------------------

@dataclass
class MorphismWitness:
    map: dict
    preservesMul: bool
    preservesStar: bool
    preservesPlus: bool
    preservesIdentity: bool | None
    projectionSeparating: bool
    injective: bool
    surjective: bool
    bound: str | None = None
    witnesses: dict = field(default_factory=dict)

    @property
    def is_morphism(self):
        return self.preservesMul and self.preservesStar and self.preservesPlus

    @property
    def isCover(self):
        return self.surjective and self.projectionSeparating and self.is_morphism

    @property
    def is_embedding(self):
        return self.is_morphism and self.injective

    @property
    def is_isomorphism(self):
        return self.is_embedding and self.surjective and self.preservesIdentity is not False

    def report(self, subject="morphism"):
        rep = Report(subject, bound=self.bound)
        for flag in ("preservesMul", "preservesStar", "preservesPlus", "preservesIdentity",
                     "projectionSeparating", "injective", "surjective"):
            rep.add(flag, flag, getattr(self, flag), self.witnesses.get(flag))
        return rep


def check_morphism(f, src, dst) -> MorphismWitness:
    """Decide the morphism flags of ``f`` (dict or callable) over ``src.elements``.

    ``surjective`` quantifies over ``dst.elements`` and is only meaningful for a
    finite ``dst``.  ``preservesIdentity`` is vacuously true when ``src`` has
    no identity.
    """
    fn = f.get if isinstance(f, dict) else f
    els = src.elements
    image = {}
    for a in els:
        b = fn(a)
        if b is None or (dst.closed and b not in dst):
            raise MalformedInputError(f"image of {fmt(a)} is outside the target")
        image[a] = b
    img = image.__getitem__
    wit = {}

    def scan(name, pred, *doms):
        w = counterexample(pred, *doms)
        if w is not None:
            wit[name] = w
        return w is None

    mul_ok = scan("preservesMul", lambda a, b: fn(src.mul(a, b)) == dst.mul(img(a), img(b)), els, els)
    star_ok = scan("preservesStar", lambda a: fn(src.star(a)) == dst.star(img(a)), els)
    plus_ok = scan("preservesPlus", lambda a: fn(src.plus(a)) == dst.plus(img(a)), els)
    if src.identity is None:
        id_ok = True
    elif dst.identity is None:
        id_ok = None  # not applicable: the target has no identity
    else:
        id_ok = fn(src.identity) == dst.identity
        if not id_ok:
            wit["preservesIdentity"] = (src.identity,)
    E = sorted(projection_elements(src), key=fmt)
    sep = scan("projectionSeparating", lambda e, g: e == g or fn(e) != fn(g), E, E)
    inj = scan("injective", lambda a, b: a == b or img(a) != img(b), els, els)
    hit = set(image.values())
    missing = [b for b in dst.elements if b not in hit]
    if missing:
        wit["surjective"] = (missing[0],)
    return MorphismWitness(image, mul_ok, star_ok, plus_ok, id_ok, sep, inj, not missing,
                           bound=src.bound, witnesses=wit)


def same_algebra(a, b):
    """Operation-table equality of two finite algebras on the same carrier."""
    if set(a.elements) != set(b.elements) or a.identity != b.identity:
        return False
    els = a.elements
    return (all(a.mul(x, y) == b.mul(x, y) for x in els for y in els)
            and all(a.star(x) == b.star(x) and a.plus(x) == b.plus(x) for x in els))
