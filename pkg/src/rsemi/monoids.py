"""Acting monoids: finite table monoids and length-bounded free monoids.

Both expose ``elements``, ``mul``, ``identity``, ``factorizations`` and a
``closed`` flag.  A :class:`FreeMonoid` multiplies exactly (concatenation is
never truncated); its ``bound`` only limits ``elements``, the domain over
which universally quantified statements are checked.
"""
from __future__ import annotations

from itertools import permutations, product

from ._util import fmt, word_name
from .errors import MalformedInputError


class FiniteMonoid:
    """A finite monoid (or semigroup, when ``identity`` is None) given by its table."""

    closed = True
    bound = None

    def __init__(self, elements, table, identity=None, name="T"):
        self.elements = tuple(elements)
        self.table = dict(table)
        self.identity = identity
        self.name = name
        index = self._index = frozenset(self.elements)
        for s, t in product(self.elements, repeat=2):
            r = self.table.get((s, t), _MISSING)
            if r is _MISSING or r not in index:
                raise MalformedInputError(f"product {fmt(s)}*{fmt(t)} missing or outside the monoid")
        if identity is not None and identity not in index:
            raise MalformedInputError("identity is not an element")

    @classmethod
    def from_rows(cls, names, rows, identity=0, name="T"):
        n = len(names)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise MalformedInputError("monoid table must be square")
        table = {}
        for i, row in enumerate(rows):
            for j, k in enumerate(row):
                if not 0 <= k < n:
                    raise MalformedInputError(f"index {k} out of range in row {i}")
                table[names[i], names[j]] = names[k]
        return cls(names, table, None if identity is None else names[identity], name)

    def mul(self, s, t):
        return self.table[s, t]

    def contains(self, t):
        return t in self._index

    def factorizations(self, s):
        """All (t, p) with t*p == s."""
        return [(t, p) for t in self.elements for p in self.elements if self.table[t, p] == s]

    def verify(self):
        """Raise MalformedInputError unless associative with a two-sided identity."""
        E = self.elements
        for a, b, c in product(E, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise MalformedInputError(f"not associative at {fmt((a, b, c))}")
        if self.identity is not None:
            for a in E:
                if self.mul(self.identity, a) != a or self.mul(a, self.identity) != a:
                    raise MalformedInputError(f"{fmt(self.identity)} is not an identity")
        return self

    def automorphisms(self):
        """Monoid automorphisms as dicts (brute force; small monoids only)."""
        rest = [e for e in self.elements if e != self.identity]
        out = []
        for perm in permutations(rest):
            f = dict(zip(rest, perm))
            if self.identity is not None:
                f[self.identity] = self.identity
            if all(f[self.mul(a, b)] == self.mul(f[a], f[b]) for a in self.elements for b in self.elements):
                out.append(f)
        return out

    def element_name(self, t):
        return fmt(t)

    def __repr__(self):
        return f"FiniteMonoid({self.name}, {len(self.elements)} elements)"


class FreeMonoid:
    """The free monoid A* over single-character letters, sampled up to ``bound``."""

    closed = False
    identity = ""

    def __init__(self, alphabet, bound):
        letters = list(alphabet)
        if any(len(a) != 1 or not a.isalpha() or not a.islower() for a in letters):
            raise MalformedInputError("alphabet letters must be single lowercase characters")
        if len(set(letters)) != len(letters):
            raise MalformedInputError("repeated letter in alphabet")
        if bound < 0:
            raise MalformedInputError("bound must be non-negative")
        self.alphabet = tuple(sorted(letters))
        self.bound = bound
        self.name = "A*"
        words = [""]
        layer = [""]
        for _ in range(bound):
            layer = [w + a for w in layer for a in self.alphabet]
            words.extend(layer)
        self.elements = tuple(words)

    def mul(self, s, t):
        return s + t

    def contains(self, t):
        return isinstance(t, str) and all(a in self.alphabet for a in t)

    def factorizations(self, s):
        return [(s[:i], s[i:]) for i in range(len(s) + 1)]

    def element_name(self, t):
        return word_name(t)

    def bound_text(self):
        return f"|word|<={self.bound}"

    def __repr__(self):
        return f"FreeMonoid({''.join(self.alphabet)}, bound={self.bound})"


_MISSING = object()
