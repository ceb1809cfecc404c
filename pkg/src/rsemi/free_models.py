"""Reduced words, prefix ideals and the Szendrei models of free restriction monoids.

Free group words are plain strings: a lowercase letter is a generator and the
matching uppercase letter its inverse (``"aB"`` is a b⁻¹).  The empty string
is the identity.  Sets of words are frozensets.

The semilattice of finite prefix-closed sets is ordered by reverse
inclusion, so its meet is the union and its top is ``{1}``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .actions import PartialAction
from .constructions import m_product
from .errors import InsufficientBoundError, MalformedInputError
from .monoids import FreeMonoid
from .order import SampledSemilattice

ONE = frozenset([""])


def _check_letters(u, alphabet):
    for c in u:
        if not c.isalpha() or (alphabet is not None and c.lower() not in alphabet):
            raise MalformedInputError(f"unknown letter {c!r} in {u!r}")


def reduce(u, alphabet=None):
    """Cancel adjacent x x⁻¹ and x⁻¹ x pairs."""
    _check_letters(u, alphabet)
    out = []
    for c in u:
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def red_product(u, v):
    return reduce(u + v)


def inverse(u):
    return u[::-1].swapcase()


def is_reduced(u):
    return all(u[i] != u[i + 1].swapcase() for i in range(len(u) - 1))


def is_positive(u):
    return all(c.islower() for c in u)


def star_action(v, S):
    """v*S = {red(vs) : s in S}."""
    return frozenset(red_product(v, s) for s in S)


def right_action(S, v):
    """S•v = v⁻¹*S."""
    return star_action(inverse(v), S)


def prefixes(u):
    return [u[:i] for i in range(len(u) + 1)]


def prefix_closure(words):
    return frozenset(p for w in words for p in prefixes(w))


def is_prefix_ideal(S):
    return "" in S and all(w[:-1] in S for w in S if w)


def enumerate_prefix_ideals(alphabet, size_bound):
    """All prefix-closed sets of reduced words with 1 <= size <= ``size_bound``.

    Ordered by size, then by the sorted word list.
    """
    if size_bound < 1:
        raise MalformedInputError("size bound must be at least 1")
    letters = sorted(alphabet)
    signed = letters + [a.upper() for a in letters]
    found = {ONE}
    layer = {ONE}
    for _ in range(size_bound - 1):
        nxt = set()
        for B in layer:
            for w in B:
                for c in signed:
                    if w and w[-1] == c.swapcase():
                        continue
                    if w + c not in B:
                        nxt.add(B | {w + c})
        found |= nxt
        layer = nxt
    return sorted(found, key=ideal_key)


def ideal_key(B):
    return (len(B), sorted(B, key=lambda w: (len(w), w)))


def ideal_semilattice(alphabet, size_bound, semigroup=False):
    """Finite prefix ideals under reverse inclusion (meet = union), sampled by size."""
    ideals = enumerate_prefix_ideals(alphabet, size_bound)
    if semigroup:
        ideals = [B for B in ideals if B != ONE]
    return SampledSemilattice(ideals, lambda x, y: x >= y, lambda x, y: x | y,
                              top=None if semigroup else ONE, bound=f"|ideal|<={size_bound}",
                              name="Y" if semigroup else "Y'")


def hull(C, D):
    """Smallest subtree of the Cayley tree containing the subtrees C and D."""
    c, d = min(C, key=_word_order), min(D, key=_word_order)
    k = 0
    while k < min(len(c), len(d)) and c[k] == d[k]:
        k += 1
    path = {c[:i] for i in range(k, len(c) + 1)} | {d[:i] for i in range(k, len(d) + 1)}
    return frozenset(C | D | path)


def _word_order(w):
    return (len(w), w)


def free_action(monoid, lattice, semigroup=False):
    """t·B defined iff t⁻¹ ∈ B, with value t*B; the reverse is B∘t = t⁻¹*B when t ∈ B."""

    def act(t, B):
        return star_action(t, B) if inverse(t) in B else None

    def act_inv(t, B):
        return star_action(inverse(t), B) if t in B else None

    def domain_top(t):
        if semigroup and t == "":
            return None
        return prefix_closure([inverse(t)])

    return PartialAction(monoid, lattice, act, act_inv, "left", domain_top, "·")


@dataclass
class FreeModel:
    alphabet: tuple
    mode: str
    ideal_size: int
    word_bound: int
    monoid: FreeMonoid
    lattice: SampledSemilattice
    action: PartialAction
    algebra: object

    @property
    def bound(self):
        return f"|word|<={self.word_bound}; |ideal|<={self.ideal_size}"


def build_free_model(alphabet="a", mode="monoid", ideal_size=4, word_bound=3):
    """M(A*, Y') (monoid mode) or M(A*, Y) (semigroup mode) on sampled ideals and words.

    The ideal sample must contain d_t for every sampled word t, i.e.
    ``ideal_size >= word_bound + 1``.
    """
    if mode not in ("monoid", "semigroup"):
        raise MalformedInputError("mode must be 'monoid' or 'semigroup'")
    if len(alphabet) > 2:
        raise MalformedInputError("free models are sampled for alphabets of at most two letters")
    if ideal_size < word_bound + 1:
        raise InsufficientBoundError(
            f"ideal size {ideal_size} cannot hold d_t for words of length {word_bound}")
    T = FreeMonoid(alphabet, word_bound)
    semigroup = mode == "semigroup"
    Y = ideal_semilattice(T.alphabet, ideal_size, semigroup)
    pa = free_action(T, Y, semigroup)
    S = m_product(pa, check=False)
    S.provenance = {"construction": "free restriction " + mode, "alphabet": "".join(T.alphabet),
                    "ideal_size": ideal_size, "word_bound": word_bound}
    return FreeModel(T.alphabet, mode, ideal_size, word_bound, T, Y, pa, S)


# -- the W-product over Q' -----------------------------------------------------

def q_sample(model):
    """{t*B : t sampled word, B sampled ideal}, a sample of Q' (or Q)."""
    out = {star_action(t, B) for t in model.monoid.elements for B in model.lattice.elements}
    return sorted(out, key=ideal_key)


def szendrei_mul(a, b):
    """Product in W(A*, Q'): (u,t)(w,s) = (u ∧ t*w, ts) with ∧ the subtree hull."""
    (u, t), (w, s) = a, b
    return (hull(u, star_action(t, w)), t + s)


def szendrei_star(a):
    u, t = a
    return (star_action(inverse(t), u), "")


def szendrei_plus(a):
    return (a[0], "")


def in_szendrei_model(a, semigroup=False):
    """(u, t) with u and t⁻¹*u both prefix ideals (excluding {1} for semigroups)."""
    u, t = a
    y = star_action(inverse(t), u)
    ok = is_prefix_ideal(u) and is_prefix_ideal(y)
    return ok and not (semigroup and (u == ONE or y == ONE))


# -- interval oracle over a one-letter alphabet -----------------------------------

def power(w):
    """The integer j with w = a^j in the free group on {a}."""
    return len(w) if w.islower() or not w else -len(w)


def to_interval(S):
    """A finite set of powers of a as (p, q), or None if it is not an interval."""
    js = sorted(power(w) for w in S)
    if js != list(range(js[0], js[-1] + 1)):
        return None
    return (js[0], js[-1])


def from_interval(p, q, letter="a"):
    return frozenset(letter * j if j >= 0 else letter.upper() * -j for j in range(p, q + 1))


def ideal_interval(m, n, letter="a"):
    """I(m, n) = {a^-n, ..., a^m}."""
    return from_interval(-n, m, letter)
