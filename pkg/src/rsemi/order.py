"""Finite posets and meet semilattices, order ideals, and the Munn monoid.

Order convention everywhere: ``leq(x, y)`` iff ``meet(x, y) == x``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from ._util import counterexample, fmt
from .errors import MalformedInputError, NotASemilatticeError, VerificationError
from .monoids import FiniteMonoid


class Semilattice:
    """Interface shared by :class:`FiniteSemilattice` and sampled semilattices.

    When ``closed`` is false, ``elements`` is a finite sample of an infinite
    semilattice; ``meet`` and ``leq`` are still computed exactly.
    """

    closed = True
    top = None
    bound = None
    elements: tuple = ()

    def leq(self, x, y):
        raise NotImplementedError

    def meet(self, x, y):
        raise NotImplementedError

    def down(self, g):
        """Elements of the carrier (or sample) below ``g``."""
        return frozenset(x for x in self.elements if self.leq(x, g))

    def maximum(self, subset):
        """The maximum of ``subset`` or None."""
        subset = list(subset)
        for m in subset:
            if all(self.leq(x, m) for x in subset):
                return m
        return None


class FiniteSemilattice(Semilattice):
    def __init__(self, elements, leq, meet, name="Y"):
        self.elements = tuple(elements)
        self._leq = frozenset(leq)
        self._meet = dict(meet)
        self.name = name
        self.top = self.maximum(self.elements)
        self.bottom = next((b for b in self.elements if all(self.leq(b, x) for x in self.elements)), None)

    def leq(self, x, y):
        return (x, y) in self._leq

    def meet(self, x, y):
        return self._meet[x, y]

    def __contains__(self, x):
        return any(x == e for e in self.elements)

    def automorphisms(self):
        out = []
        for perm in permutations(self.elements):
            f = dict(zip(self.elements, perm))
            if all(self.leq(x, y) == self.leq(f[x], f[y]) for x in self.elements for y in self.elements):
                out.append(f)
        return out

    def __repr__(self):
        return f"FiniteSemilattice({self.name}, {[fmt(e) for e in self.elements]})"


class SampledSemilattice(Semilattice):
    """An infinite semilattice given by exact operations and a finite sample."""

    closed = False

    def __init__(self, sample, leq, meet, top=None, bound=None, name="Y"):
        self.elements = tuple(sample)
        self._leq_fn = leq
        self._meet_fn = meet
        self.top = top
        self.bound = bound
        self.name = name

    def leq(self, x, y):
        return self._leq_fn(x, y)

    def meet(self, x, y):
        return self._meet_fn(x, y)


def build_semilattice(elements, leq=None, meet=None, name="Y"):
    """Build a :class:`FiniteSemilattice` from an order relation or a meet table.

    ``leq`` is any set of pairs generating the order (its reflexive-transitive
    closure is taken); ``meet`` is a dict ``(x, y) -> x∧y``.  Exactly one of
    them must be given.
    """
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise MalformedInputError("repeated element")
    if (leq is None) == (meet is None):
        raise MalformedInputError("give exactly one of leq or meet")
    index = set(elements)
    if meet is not None:
        for x, y in product(elements, repeat=2):
            if (x, y) not in meet or meet[x, y] not in index:
                raise MalformedInputError(f"meet of {fmt(x)},{fmt(y)} missing or outside the set")
        w = counterexample(lambda x: meet[x, x] == x, elements)
        w = w or counterexample(lambda x, y: meet[x, y] == meet[y, x], elements, elements)
        w = w or counterexample(lambda x, y, z: meet[meet[x, y], z] == meet[x, meet[y, z]],
                                elements, elements, elements)
        if w:
            raise NotASemilatticeError(f"meet table is not a semilattice operation at {fmt(w)}", w)
        order = {(x, y) for x, y in product(elements, repeat=2) if meet[x, y] == x}
        return FiniteSemilattice(elements, order, meet, name)

    order = {(x, x) for x in elements}
    for x, y in leq:
        if x not in index or y not in index:
            raise MalformedInputError(f"order pair {fmt((x, y))} outside the set")
        order.add((x, y))
    changed = True
    while changed:
        changed = False
        for (x, y), (u, v) in product(list(order), repeat=2):
            if y == u and (x, v) not in order:
                order.add((x, v))
                changed = True
    for x, y in product(elements, repeat=2):
        if x != y and (x, y) in order and (y, x) in order:
            raise MalformedInputError(f"order is not antisymmetric at {fmt((x, y))}")
    table = {}
    for x, y in product(elements, repeat=2):
        lower = [z for z in elements if (z, x) in order and (z, y) in order]
        glb = [m for m in lower if all((z, m) in order for z in lower)]
        if not glb:
            raise NotASemilatticeError(f"{fmt(x)} and {fmt(y)} have no meet", (x, y))
        table[x, y] = glb[0]
    return FiniteSemilattice(elements, order, table, name)


def chain(n, name=None):
    """The chain 0 < 1 < ... < n-1 with elements named by digits."""
    els = [str(i) for i in range(n)]
    return build_semilattice(els, leq=[(els[i], els[i + 1]) for i in range(n - 1)], name=name or f"C{n}")


@dataclass(frozen=True)
class OrderIdeal:
    elements: frozenset
    generator: object = None

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)


def is_order_ideal(subset, lattice):
    """Downward closure of ``subset`` (quantified over the lattice's elements)."""
    subset = set(subset)
    return all(x in subset for x in lattice.elements for y in subset if lattice.leq(x, y))


def principal_ideal(lattice, g):
    return OrderIdeal(lattice.down(g), g)


def order_ideals(lattice, nonempty=True):
    """All order ideals of a finite semilattice (brute force over subsets)."""
    els = lattice.elements
    out = []
    for mask in range(1 if nonempty else 0, 1 << len(els)):
        sub = frozenset(e for i, e in enumerate(els) if mask >> i & 1)
        if is_order_ideal(sub, lattice):
            out.append(OrderIdeal(sub, lattice.maximum(sub)))
    return out


def check_order_iso(mapping, dom, ran, lattice):
    """True iff ``mapping`` is a bijection dom -> ran preserving and reflecting order."""
    dom = set(dom)
    ran = set(ran)
    if set(mapping) != dom:
        return False
    image = [mapping[x] for x in dom]
    if len(set(image)) != len(image) or set(image) != ran:
        return False
    return all(lattice.leq(x, y) == lattice.leq(mapping[x], mapping[y]) for x in dom for y in dom)


@dataclass(frozen=True)
class PartialOrderIso:
    """A partial bijection of a semilattice, stored as its graph."""

    graph: frozenset

    @classmethod
    def from_dict(cls, d):
        return cls(frozenset(d.items()))

    @property
    def mapping(self):
        return dict(self.graph)

    @property
    def domain(self):
        return frozenset(x for x, _ in self.graph)

    @property
    def range(self):
        return frozenset(y for _, y in self.graph)

    def __call__(self, x):
        return self.mapping.get(x)

    def inverse(self):
        return PartialOrderIso(frozenset((y, x) for x, y in self.graph))

    def after(self, other):
        """Partial composition: first ``other``, then ``self``."""
        m = self.mapping
        return PartialOrderIso(frozenset((x, m[y]) for x, y in other.graph if y in m))

    def __str__(self):
        return "{" + ", ".join(f"{fmt(x)}->{fmt(y)}" for x, y in sorted(self.graph, key=lambda p: fmt(p))) + "}"


def munn_monoid(Y):
    """The Munn semigroup T_Y: order-isomorphisms between principal ideals.

    Returned as a :class:`FiniteMonoid` whose elements are
    :class:`PartialOrderIso` values; composition ``s*t`` applies ``t`` first.
    The identity is the identity map on ``top↓`` and is None when Y has no top.
    """
    downs = {g: sorted(Y.down(g), key=fmt) for g in Y.elements}
    elements = []
    for g, h in product(Y.elements, repeat=2):
        dg, dh = downs[g], downs[h]
        if len(dg) != len(dh):
            continue
        for perm in permutations(dh):
            m = dict(zip(dg, perm))
            if check_order_iso(m, dg, dh, Y):
                elements.append(PartialOrderIso.from_dict(m))
    elements = list(dict.fromkeys(elements))
    index = set(elements)
    table = {}
    for s, t in product(elements, repeat=2):
        st = s.after(t)
        if st not in index:
            raise VerificationError(f"Munn composition left the semigroup: {s} after {t}")
        table[s, t] = st
    identity = None
    if Y.top is not None:
        identity = PartialOrderIso.from_dict({x: x for x in Y.elements})
    M = FiniteMonoid(elements, table, identity, name=f"T_{Y.name}")
    M.is_monoid = identity is not None
    return M
