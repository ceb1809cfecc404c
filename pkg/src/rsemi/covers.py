"""Proper covers over free monoids, the κ-congruence and the embedding into W/κ.

Generators are given as a mapping ``letter -> element`` of the algebra S.  A
word v evaluates to v̄ in S; the empty word evaluates to the identity (or
acts as the identity map when S is a semigroup without one).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product

from ._util import GlobalPair, fmt
from .actions import PartialAction, classify_action, underlying_action
from .algebra import (ClassificationFlags, FiniteRestrictionAlgebra, MorphismWitness, ample_witness,
                      check_morphism, projections)
from .constructions import m_product
from .errors import GenerationError, InsufficientBoundError, MalformedInputError
from .globalization import build_w_of_global
from .monoids import FreeMonoid
from .report import Report

MAX_WORD_SEARCH = 8


def normalize_generators(S, generators):
    """Accept a dict, 'letter=element' strings, or element names that are single letters."""
    if isinstance(generators, dict):
        gens = dict(generators)
    else:
        gens = {}
        spare = iter(c for c in "abcdefghijklmnopqrstuvwxyz")
        for g in generators:
            if isinstance(g, str) and "=" in g:
                letter, el = g.split("=", 1)
                gens[letter.strip()] = el.strip()
            elif isinstance(g, str) and len(g) == 1 and g.isalpha() and g.islower():
                gens[g] = g
            else:
                letter = next(c for c in spare if c not in gens and c not in map(str, generators))
                gens[letter] = g
    if not gens:
        raise MalformedInputError("at least one generator is needed")
    for letter, el in gens.items():
        if len(letter) != 1 or not letter.isalpha() or not letter.islower():
            raise MalformedInputError(f"generator letter {letter!r} must be one lowercase character")
        if el not in S:
            raise MalformedInputError(f"generator {letter}={fmt(el)} is not an element")
    return gens


def generated_subalgebra(S, elements, with_identity=True):
    """Closure of ``elements`` under product, * and + (and the identity)."""
    seen = list(dict.fromkeys(elements))
    if with_identity and S.identity is not None and S.identity not in seen:
        seen.append(S.identity)
    known = set(seen)
    i = 0
    while i < len(seen):
        a = seen[i]
        new = [S.star(a), S.plus(a)]
        for b in seen[: i + 1]:
            new += [S.mul(a, b), S.mul(b, a)]
        for c in new:
            if c not in known:
                known.add(c)
                seen.append(c)
        i += 1
    return seen


def evaluate(S, gens, word):
    """v̄ in S; None for the empty word of a semigroup."""
    if not word:
        return S.identity
    value = gens[word[0]]
    for c in word[1:]:
        value = S.mul(value, gens[c])
    return value


@dataclass
class CoverPackage:
    source: object
    generators: dict
    mode: str
    monoid: FreeMonoid
    lattice: object
    action: PartialAction
    algebra: object
    morphism: MorphismWitness
    min_bound: int
    action_flags: object
    flags: ClassificationFlags
    report: Report = field(default=None)

    def bar(self, word):
        return evaluate(self.source, self.generators, word)

    def cover_map(self, a):
        e, v = a
        return e if not v else self.source.mul(e, self.bar(v))


def cover_action(S, gens, T, E):
    """v·e defined iff v̄* >= e, value (v̄ e)+; e∘v defined iff v̄+ >= e, value (e v̄)*."""
    monoid = S.identity is not None

    def bar(v):
        return evaluate(S, gens, v)

    def act(v, e):
        if not v and not monoid:
            return e
        b = bar(v)
        return S.plus(S.mul(b, e)) if E.leq(e, S.star(b)) else None

    def act_inv(v, e):
        if not v and not monoid:
            return e
        b = bar(v)
        return S.star(S.mul(e, b)) if E.leq(e, S.plus(b)) else None

    def domain_top(v):
        if not v and not monoid:
            return None
        return S.star(bar(v))

    return PartialAction(T, E, act, act_inv, "left", domain_top, "·")


def minimal_word_bound(S, gens, E):
    """Least L such that every element of S is e·v̄ for some cover element (e, v) with |v| <= L."""
    letters = sorted(gens)
    covered = set()
    layer = [""]
    for n in range(MAX_WORD_SEARCH + 1):
        for v in layer:
            b = evaluate(S, gens, v)
            for e in E.elements:
                if b is None:
                    covered.add(e)
                elif E.leq(e, S.plus(b)):
                    covered.add(S.mul(e, b))
        if covered >= set(S.elements):
            return n
        layer = [v + a for v in layer for a in letters]
    raise GenerationError("no word bound up to %d covers every element" % MAX_WORD_SEARCH)


def classify_sampled(alg, sigma_key, underlying=None) -> ClassificationFlags:
    """Classification flags of a bounded M(T,Y), quantified over its sample.

    σ-classes are given by ``sigma_key`` (the T-coordinate for M(T,Y)).  The
    natural order is a <= b iff a = a+ b.
    """
    els = alg.elements
    wit = {}
    w_proper = next(((a, b) for a, b in product(els, repeat=2)
                     if a != b and sigma_key(a) == sigma_key(b)
                     and (alg.star(a) == alg.star(b) or alg.plus(a) == alg.plus(b))), None)
    w_ample = ample_witness(alg)
    fibres = {}
    for a in els:
        fibres.setdefault(sigma_key(a), []).append(a)
    le = lambda a, b: a == alg.mul(alg.plus(a), b)
    no_max = next((k for k, f in fibres.items() if not any(all(le(b, m) for b in f) for m in f)), None)
    pa = underlying if underlying is not None else underlying_action(alg)
    act = classify_action(pa)
    if w_proper:
        wit["proper"] = w_proper
    if w_ample:
        wit["ample"] = w_ample
    if no_max is not None:
        wit["F-restriction"] = (no_max,)
    proper = w_proper is None
    rev = classify_action(pa.reverse())
    f = ClassificationFlags(
        isProper=proper, isAmple=w_ample is None, isFRestriction=no_max is None,
        isLeftExtraProper=act.isStrong if proper else None,
        isRightExtraProper=rev.isStrong if proper else None,
        isUltraProper=act.isPDA if proper else None,
        isUltraFRestriction=(act.isPDA and no_max is None) if proper else None,
        sigmaIsPerfect=None, isMonoid=alg.identity is not None, witnesses=wit)
    if proper:
        f.isExtraProper = f.isLeftExtraProper and f.isRightExtraProper
        f.isFAMonoid = f.isAmple and f.isExtraProper and f.isFRestriction
    return f


def build_cover(S, generators, bound=None):
    """M(A*, P(S)) with the cover action and the cover map (e, v) -> e·v̄.

    ``bound`` defaults to the least word length at which the cover map is onto.
    Raises :class:`GenerationError` naming an element the generators miss.
    """
    gens = normalize_generators(S, generators)
    reach = set(generated_subalgebra(S, gens.values()))
    missing = [a for a in S.elements if a not in reach]
    if missing:
        raise GenerationError(f"{fmt(missing[0])} is not generated by {sorted(gens)}", (missing[0],))
    E = projections(S).semilattice
    min_bound = minimal_word_bound(S, gens, E)
    bound = min_bound if bound is None else bound
    T = FreeMonoid(sorted(gens), bound)
    pa = cover_action(S, gens, T, E)
    M = m_product(pa, check=False)
    mode = "monoid" if S.identity is not None else "semigroup"
    M.provenance = {"construction": "cover", "mode": mode,
                    "generators": {k: fmt(v) for k, v in sorted(gens.items())}, "word_bound": bound}

    def cmap(a):
        e, v = a
        return e if not v else S.mul(e, evaluate(S, gens, v))

    mw = check_morphism(cmap, M, S)
    act_flags = classify_action(pa)
    flags = classify_sampled(M, lambda a: a[1], pa)
    pkg = CoverPackage(S, gens, mode, T, E, pa, M, mw, min_bound, act_flags, flags)
    rep = Report(f"cover ({mode})", bound=f"|word|<={bound}")
    rep.add("cover:bound", f"every element is e·v̄ with |v| <= {min_bound}", bound >= min_bound,
            None if bound >= min_bound else (min_bound,))
    rep.add("cover:PDA", "the cover action is a partially defined action", act_flags.isPDA,
            act_flags.witnesses.get("PDA"))
    rep.add("cover:ample", "the cover is ample", flags.isAmple, flags.witnesses.get("ample"))
    rep.add("cover:proper", "the cover is proper", flags.isProper, flags.witnesses.get("proper"))
    rep.add("cover:ultra-proper", "the cover is ultra proper", flags.isUltraProper)
    if mode == "monoid":
        rep.add("cover:F-restriction", "every σ-class of the cover has a maximum", flags.isFRestriction,
                flags.witnesses.get("F-restriction"))
        rep.add("cover:principal", "every domain of the cover action is principal", act_flags.domainsPrincipal)
    else:
        rep.add("cover:principal", "every domain except that of ε is principal",
                act_flags.domainsPrincipalExceptIdentity)
    cover_flags = mw.report("cover map")
    cover_flags.checks = [c for c in cover_flags.checks if c.id != "injective"]
    rep.extend(cover_flags, prefix="cover-map:")
    pkg.report = rep
    return pkg


def adjoin_identity(S, name="1"):
    """S¹ with a new identity 1 and 1* = 1+ = 1."""
    if S.identity is not None:
        warnings.warn("adjoining an identity to a monoid gives a strictly larger monoid", stacklevel=2)
    while name in S:
        name += "'"
    els = list(S.elements) + [name]
    table = dict(S.table)
    for a in els:
        table[name, a] = a
        table[a, name] = a
    star = dict(S.star_map, **{name: name})
    plus = dict(S.plus_map, **{name: name})
    return FiniteRestrictionAlgebra(els, table, star, plus, name,
                                    {"construction": "adjoin identity", "new": name})


# -- kappa ---------------------------------------------------------------------


@dataclass
class KappaCongruence:
    source: object
    monoid_source: object
    cover: CoverPackage
    W: object
    generators: dict
    bound: int
    report: Report = field(default=None)

    def decompose(self, x):
        """(c, q) when x = (c, pq) with c = [e, p] canonical; None outside W₁."""
        c, w = x
        if not w.startswith(c.word):
            return None
        return c, w[len(c.word):]

    def inv(self, x):
        d = self.decompose(x)
        if d is None:
            return None
        c, q = d
        S = self.monoid_source
        return S.mul(c.y, evaluate(S, self.generators, q))

    def key(self, x):
        d = self.decompose(x)
        if d is None:
            return ("other", x)
        return ("W1", d[0], self.inv(x))

    def related(self, x, y):
        return self.key(x) == self.key(y)


def build_kappa(S, generators, bound=None):
    """Cover (with an identity adjoined for semigroups), W(A*, X) and κ, with stability checks."""
    S1 = S if S.identity is not None else adjoin_identity(S)
    gens = normalize_generators(S, generators)
    cover = build_cover(S1, gens, bound)
    if bound is None:
        bound = cover.min_bound
    W = build_w_of_global(cover.action)
    kc = KappaCongruence(S, S1, cover, W, gens, bound)
    kc.report = kappa_report(kc)
    return kc


def kappa_report(kc) -> Report:
    W = kc.W
    els = W.elements
    key = kc.key
    rep = Report("kappa", bound=f"|word|<={kc.bound}; generators {','.join(sorted(kc.generators))}")
    classes = {}
    for x in els:
        classes.setdefault(key(x), []).append(x)
    related = [(x, y) for cl in classes.values() for x in cl for y in cl if x != y]
    rep.scan("kappa:equivalence", "κ is reflexive, symmetric and transitive",
             lambda x, y: kc.related(x, x) and kc.related(x, y) == kc.related(y, x), els, els)
    rep.scan("kappa:star", "x κ y implies x* = y* and x+ κ y+",
             lambda p: W.star(p[0]) == W.star(p[1]) and kc.related(W.plus(p[0]), W.plus(p[1])), related)
    rep.scan("kappa:left", "x κ y implies z x κ z y",
             lambda p, z: kc.related(W.mul(z, p[0]), W.mul(z, p[1])), related, els)
    rep.scan("kappa:right", "x κ y implies x z κ y z",
             lambda p, z: kc.related(W.mul(p[0], z), W.mul(p[1], z)), related, els)
    projs = sorted({W.star(x) for x in els} | {W.plus(x) for x in els}, key=fmt)
    rep.scan("kappa:projection-separating", "κ-related projections are equal",
             lambda e, f: e == f or not kc.related(e, f), projs, projs)
    M = kc.cover.algebra
    S1 = kc.monoid_source
    embedded = [a for a in M.elements]
    rep.scan("kappa:kernel", "([x,ε],s) κ ([y,ε],t) iff x·s̄ = y·t̄",
             lambda a, b: kc.related((GlobalPair(a[0], ""), a[1]), (GlobalPair(b[0], ""), b[1]))
             == (kc.cover.cover_map(a) == kc.cover.cover_map(b)), embedded, embedded)
    rep.scan("kappa:inv", "inv is constant on γ-classes and equals e·q̄",
             lambda x: kc.decompose(x) is None
             or kc.inv(x) == S1.mul(kc.decompose(x)[0].y, evaluate(S1, kc.generators, kc.decompose(x)[1])), els)
    return rep


@dataclass
class KappaQuotient:
    """W/κ on κ-classes, computed representative-wise with an insert-only table."""

    kappa: KappaCongruence
    reps: dict = field(default_factory=dict)
    closed = False
    identity = None
    bound = None
    action = None

    def cls(self, x):
        k = self.kappa.key(x)
        self.reps.setdefault(k, x)
        return k

    def mul(self, k1, k2):
        return self.cls(self.kappa.W.mul(self.reps[k1], self.reps[k2]))

    def star(self, k):
        return self.cls(self.kappa.W.star(self.reps[k]))

    def plus(self, k):
        return self.cls(self.kappa.W.plus(self.reps[k]))

    @property
    def elements(self):
        return tuple(self.reps)

    def __contains__(self, k):
        return k in self.reps


def quotient_and_embed(kc, S=None):
    """s -> κ-class of ([e,ε], v) for a cover preimage (e, v) of s; checked to be an embedding."""
    S = S or kc.source
    cover = kc.cover
    Q = KappaQuotient(kc)
    for x in kc.W.elements:
        Q.cls(x)
    image = {}
    rep = Report("embedding into W/κ", bound=f"|word|<={kc.bound}")
    ill = None
    for s in S.elements:
        pre = [a for a in cover.algebra.elements if cover.cover_map(a) == s]
        if not pre:
            raise InsufficientBoundError(f"no cover element of word length <= {kc.bound} maps to {fmt(s)}")
        keys = {Q.cls((GlobalPair(e, ""), v)) for e, v in pre}
        if len(keys) > 1 and ill is None:
            ill = (s,)
        image[s] = Q.cls((GlobalPair(pre[0][0], ""), pre[0][1]))
    rep.add("embed:well-defined", "all cover preimages of s give one κ-class", ill is None, ill)
    mw = check_morphism(image, S, Q)
    mw.quotient = Q
    rep.extend(mw.report("embedding"), prefix="embed:")
    rep.checks = [c for c in rep.checks if c.id != "embed:surjective"]
    mw.embed_report = rep
    return mw
